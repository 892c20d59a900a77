# Three exact and bounded evaluations.
mul(1/2, 3/4)
P(1,2,3)
sum(geom(1/2, 1/2))

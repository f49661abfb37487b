cubical-complex v1
vertices 20
# generated: torus:5,4
cube 2 0 1 5 6
cube 2 0 1 15 16
cube 2 0 4 5 9
cube 2 0 4 15 19
cube 2 1 2 6 7
cube 2 1 2 16 17
cube 2 2 3 7 8
cube 2 2 3 17 18
cube 2 3 4 8 9
cube 2 3 4 18 19
cube 2 5 6 10 11
cube 2 5 9 10 14
cube 2 6 7 11 12
cube 2 7 8 12 13
cube 2 8 9 13 14
cube 2 10 11 15 16
cube 2 10 14 15 19
cube 2 11 12 16 17
cube 2 12 13 17 18
cube 2 13 14 18 19

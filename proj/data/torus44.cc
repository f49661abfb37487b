cubical-complex v1
vertices 16
# generated: torus:4,4
cube 2 0 1 4 5
cube 2 0 1 12 13
cube 2 0 3 4 7
cube 2 0 3 12 15
cube 2 1 2 5 6
cube 2 1 2 13 14
cube 2 2 3 6 7
cube 2 2 3 14 15
cube 2 4 5 8 9
cube 2 4 7 8 11
cube 2 5 6 9 10
cube 2 6 7 10 11
cube 2 8 9 12 13
cube 2 8 11 12 15
cube 2 9 10 13 14
cube 2 10 11 14 15

cubical-complex v1
vertices 4
cube 2 0 1 2 3

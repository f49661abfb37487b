cubical-complex v1
vertices 64
# generated: torus:4,4,4
cube 3 0 1 4 5 16 17 20 21
cube 3 0 1 4 5 48 49 52 53
cube 3 0 1 12 13 16 17 28 29
cube 3 0 1 12 13 48 49 60 61
cube 3 0 3 4 7 16 19 20 23
cube 3 0 3 4 7 48 51 52 55
cube 3 0 3 12 15 16 19 28 31
cube 3 0 3 12 15 48 51 60 63
cube 3 1 2 5 6 17 18 21 22
cube 3 1 2 5 6 49 50 53 54
cube 3 1 2 13 14 17 18 29 30
cube 3 1 2 13 14 49 50 61 62
cube 3 2 3 6 7 18 19 22 23
cube 3 2 3 6 7 50 51 54 55
cube 3 2 3 14 15 18 19 30 31
cube 3 2 3 14 15 50 51 62 63
cube 3 4 5 8 9 20 21 24 25
cube 3 4 5 8 9 52 53 56 57
cube 3 4 7 8 11 20 23 24 27
cube 3 4 7 8 11 52 55 56 59
cube 3 5 6 9 10 21 22 25 26
cube 3 5 6 9 10 53 54 57 58
cube 3 6 7 10 11 22 23 26 27
cube 3 6 7 10 11 54 55 58 59
cube 3 8 9 12 13 24 25 28 29
cube 3 8 9 12 13 56 57 60 61
cube 3 8 11 12 15 24 27 28 31
cube 3 8 11 12 15 56 59 60 63
cube 3 9 10 13 14 25 26 29 30
cube 3 9 10 13 14 57 58 61 62
cube 3 10 11 14 15 26 27 30 31
cube 3 10 11 14 15 58 59 62 63
cube 3 16 17 20 21 32 33 36 37
cube 3 16 17 28 29 32 33 44 45
cube 3 16 19 20 23 32 35 36 39
cube 3 16 19 28 31 32 35 44 47
cube 3 17 18 21 22 33 34 37 38
cube 3 17 18 29 30 33 34 45 46
cube 3 18 19 22 23 34 35 38 39
cube 3 18 19 30 31 34 35 46 47
cube 3 20 21 24 25 36 37 40 41
cube 3 20 23 24 27 36 39 40 43
cube 3 21 22 25 26 37 38 41 42
cube 3 22 23 26 27 38 39 42 43
cube 3 24 25 28 29 40 41 44 45
cube 3 24 27 28 31 40 43 44 47
cube 3 25 26 29 30 41 42 45 46
cube 3 26 27 30 31 42 43 46 47
cube 3 32 33 36 37 48 49 52 53
cube 3 32 33 44 45 48 49 60 61
cube 3 32 35 36 39 48 51 52 55
cube 3 32 35 44 47 48 51 60 63
cube 3 33 34 37 38 49 50 53 54
cube 3 33 34 45 46 49 50 61 62
cube 3 34 35 38 39 50 51 54 55
cube 3 34 35 46 47 50 51 62 63
cube 3 36 37 40 41 52 53 56 57
cube 3 36 39 40 43 52 55 56 59
cube 3 37 38 41 42 53 54 57 58
cube 3 38 39 42 43 54 55 58 59
cube 3 40 41 44 45 56 57 60 61
cube 3 40 43 44 47 56 59 60 63
cube 3 41 42 45 46 57 58 61 62
cube 3 42 43 46 47 58 59 62 63

cubical-complex v1
vertices 384
# generated: davisX:K=hemispherex:n=1,m=1,1,ext
cube 2 0 64 66 256
cube 2 0 64 67 257
cube 2 0 64 69 258
cube 2 0 65 66 259
cube 2 0 65 67 260
cube 2 0 65 69 261
cube 2 0 66 68 262
cube 2 0 67 68 263
cube 2 1 64 71 256
cube 2 1 64 72 257
cube 2 1 64 74 258
cube 2 1 70 71 264
cube 2 1 70 72 265
cube 2 1 70 74 266
cube 2 1 71 73 267
cube 2 1 72 73 268
cube 2 2 65 76 259
cube 2 2 65 77 260
cube 2 2 65 79 261
cube 2 2 75 76 269
cube 2 2 75 77 270
cube 2 2 75 79 271
cube 2 2 76 78 272
cube 2 2 77 78 273
cube 2 3 70 80 264
cube 2 3 70 81 265
cube 2 3 70 83 266
cube 2 3 75 80 269
cube 2 3 75 81 270
cube 2 3 75 83 271
cube 2 3 80 82 274
cube 2 3 81 82 275
cube 2 4 66 84 256
cube 2 4 66 85 259
cube 2 4 66 87 262
cube 2 4 84 86 276
cube 2 4 84 88 277
cube 2 4 85 86 278
cube 2 4 85 88 279
cube 2 4 86 87 280
cube 2 5 71 84 256
cube 2 5 71 89 264
cube 2 5 71 91 267
cube 2 5 84 90 276
cube 2 5 84 92 277
cube 2 5 89 90 281
cube 2 5 89 92 282
cube 2 5 90 91 283
cube 2 6 76 85 259
cube 2 6 76 93 269
cube 2 6 76 95 272
cube 2 6 85 94 278
cube 2 6 85 96 279
cube 2 6 93 94 284
cube 2 6 93 96 285
cube 2 6 94 95 286
cube 2 7 80 89 264
cube 2 7 80 93 269
cube 2 7 80 98 274
cube 2 7 89 97 281
cube 2 7 89 99 282
cube 2 7 93 97 284
cube 2 7 93 99 285
cube 2 7 97 98 287
cube 2 8 67 100 257
cube 2 8 67 101 260
cube 2 8 67 103 263
cube 2 8 100 102 288
cube 2 8 100 104 289
cube 2 8 101 102 290
cube 2 8 101 104 291
cube 2 8 102 103 292
cube 2 9 72 100 257
cube 2 9 72 105 265
cube 2 9 72 107 268
cube 2 9 100 106 288
cube 2 9 100 108 289
cube 2 9 105 106 293
cube 2 9 105 108 294
cube 2 9 106 107 295
cube 2 10 77 101 260
cube 2 10 77 109 270
cube 2 10 77 111 273
cube 2 10 101 110 290
cube 2 10 101 112 291
cube 2 10 109 110 296
cube 2 10 109 112 297
cube 2 10 110 111 298
cube 2 11 81 105 265
cube 2 11 81 109 270
cube 2 11 81 114 275
cube 2 11 105 113 293
cube 2 11 105 115 294
cube 2 11 109 113 296
cube 2 11 109 115 297
cube 2 11 113 114 299
cube 2 12 86 116 276
cube 2 12 86 117 278
cube 2 12 86 118 280
cube 2 12 102 116 288
cube 2 12 102 117 290
cube 2 12 102 118 292
cube 2 12 116 119 300
cube 2 12 117 119 301
cube 2 13 90 116 276
cube 2 13 90 120 281
cube 2 13 90 121 283
cube 2 13 106 116 288
cube 2 13 106 120 293
cube 2 13 106 121 295
cube 2 13 116 122 300
cube 2 13 120 122 302
cube 2 14 94 117 278
cube 2 14 94 123 284
cube 2 14 94 124 286
cube 2 14 110 117 290
cube 2 14 110 123 296
cube 2 14 110 124 298
cube 2 14 117 125 301
cube 2 14 123 125 303
cube 2 15 97 120 281
cube 2 15 97 123 284
cube 2 15 97 126 287
cube 2 15 113 120 293
cube 2 15 113 123 296
cube 2 15 113 126 299
cube 2 15 120 127 302
cube 2 15 123 127 303
cube 2 16 68 130 262
cube 2 16 68 131 263
cube 2 16 128 130 304
cube 2 16 128 131 305
cube 2 16 128 132 306
cube 2 16 129 130 307
cube 2 16 129 131 308
cube 2 16 129 132 309
cube 2 17 73 134 267
cube 2 17 73 135 268
cube 2 17 128 134 304
cube 2 17 128 135 305
cube 2 17 128 136 306
cube 2 17 133 134 310
cube 2 17 133 135 311
cube 2 17 133 136 312
cube 2 18 78 138 272
cube 2 18 78 139 273
cube 2 18 129 138 307
cube 2 18 129 139 308
cube 2 18 129 140 309
cube 2 18 137 138 313
cube 2 18 137 139 314
cube 2 18 137 140 315
cube 2 19 82 141 274
cube 2 19 82 142 275
cube 2 19 133 141 310
cube 2 19 133 142 311
cube 2 19 133 143 312
cube 2 19 137 141 313
cube 2 19 137 142 314
cube 2 19 137 143 315
cube 2 20 87 130 262
cube 2 20 87 146 280
cube 2 20 130 144 304
cube 2 20 130 145 307
cube 2 20 144 146 316
cube 2 20 144 147 317
cube 2 20 145 146 318
cube 2 20 145 147 319
cube 2 21 91 134 267
cube 2 21 91 149 283
cube 2 21 134 144 304
cube 2 21 134 148 310
cube 2 21 144 149 316
cube 2 21 144 150 317
cube 2 21 148 149 320
cube 2 21 148 150 321
cube 2 22 95 138 272
cube 2 22 95 152 286
cube 2 22 138 145 307
cube 2 22 138 151 313
cube 2 22 145 152 318
cube 2 22 145 153 319
cube 2 22 151 152 322
cube 2 22 151 153 323
cube 2 23 98 141 274
cube 2 23 98 154 287
cube 2 23 141 148 310
cube 2 23 141 151 313
cube 2 23 148 154 320
cube 2 23 148 155 321
cube 2 23 151 154 322
cube 2 23 151 155 323
cube 2 24 103 131 263
cube 2 24 103 158 292
cube 2 24 131 156 305
cube 2 24 131 157 308
cube 2 24 156 158 324
cube 2 24 156 159 325
cube 2 24 157 158 326
cube 2 24 157 159 327
cube 2 25 107 135 268
cube 2 25 107 161 295
cube 2 25 135 156 305
cube 2 25 135 160 311
cube 2 25 156 161 324
cube 2 25 156 162 325
cube 2 25 160 161 328
cube 2 25 160 162 329
cube 2 26 111 139 273
cube 2 26 111 164 298
cube 2 26 139 157 308
cube 2 26 139 163 314
cube 2 26 157 164 326
cube 2 26 157 165 327
cube 2 26 163 164 330
cube 2 26 163 165 331
cube 2 27 114 142 275
cube 2 27 114 166 299
cube 2 27 142 160 311
cube 2 27 142 163 314
cube 2 27 160 166 328
cube 2 27 160 167 329
cube 2 27 163 166 330
cube 2 27 163 167 331
cube 2 28 118 146 280
cube 2 28 118 158 292
cube 2 28 146 168 316
cube 2 28 146 169 318
cube 2 28 158 168 324
cube 2 28 158 169 326
cube 2 28 168 170 332
cube 2 28 169 170 333
cube 2 29 121 149 283
cube 2 29 121 161 295
cube 2 29 149 168 316
cube 2 29 149 171 320
cube 2 29 161 168 324
cube 2 29 161 171 328
cube 2 29 168 172 332
cube 2 29 171 172 334
cube 2 30 124 152 286
cube 2 30 124 164 298
cube 2 30 152 169 318
cube 2 30 152 173 322
cube 2 30 164 169 326
cube 2 30 164 173 330
cube 2 30 169 174 333
cube 2 30 173 174 335
cube 2 31 126 154 287
cube 2 31 126 166 299
cube 2 31 154 171 320
cube 2 31 154 173 322
cube 2 31 166 171 328
cube 2 31 166 173 330
cube 2 31 171 175 334
cube 2 31 173 175 335
cube 2 32 69 176 258
cube 2 32 69 177 261
cube 2 32 176 178 336
cube 2 32 176 179 337
cube 2 32 177 178 338
cube 2 32 177 179 339
cube 2 32 178 180 340
cube 2 32 179 180 341
cube 2 33 74 176 258
cube 2 33 74 181 266
cube 2 33 176 182 336
cube 2 33 176 183 337
cube 2 33 181 182 342
cube 2 33 181 183 343
cube 2 33 182 184 344
cube 2 33 183 184 345
cube 2 34 79 177 261
cube 2 34 79 185 271
cube 2 34 177 186 338
cube 2 34 177 187 339
cube 2 34 185 186 346
cube 2 34 185 187 347
cube 2 34 186 188 348
cube 2 34 187 188 349
cube 2 35 83 181 266
cube 2 35 83 185 271
cube 2 35 181 189 342
cube 2 35 181 190 343
cube 2 35 185 189 346
cube 2 35 185 190 347
cube 2 35 189 191 350
cube 2 35 190 191 351
cube 2 36 88 192 277
cube 2 36 88 193 279
cube 2 36 178 192 336
cube 2 36 178 193 338
cube 2 36 178 195 340
cube 2 36 192 194 352
cube 2 36 193 194 353
cube 2 36 194 195 354
cube 2 37 92 192 277
cube 2 37 92 196 282
cube 2 37 182 192 336
cube 2 37 182 196 342
cube 2 37 182 198 344
cube 2 37 192 197 352
cube 2 37 196 197 355
cube 2 37 197 198 356
cube 2 38 96 193 279
cube 2 38 96 199 285
cube 2 38 186 193 338
cube 2 38 186 199 346
cube 2 38 186 201 348
cube 2 38 193 200 353
cube 2 38 199 200 357
cube 2 38 200 201 358
cube 2 39 99 196 282
cube 2 39 99 199 285
cube 2 39 189 196 342
cube 2 39 189 199 346
cube 2 39 189 203 350
cube 2 39 196 202 355
cube 2 39 199 202 357
cube 2 39 202 203 359
cube 2 40 104 204 289
cube 2 40 104 205 291
cube 2 40 179 204 337
cube 2 40 179 205 339
cube 2 40 179 207 341
cube 2 40 204 206 360
cube 2 40 205 206 361
cube 2 40 206 207 362
cube 2 41 108 204 289
cube 2 41 108 208 294
cube 2 41 183 204 337
cube 2 41 183 208 343
cube 2 41 183 210 345
cube 2 41 204 209 360
cube 2 41 208 209 363
cube 2 41 209 210 364
cube 2 42 112 205 291
cube 2 42 112 211 297
cube 2 42 187 205 339
cube 2 42 187 211 347
cube 2 42 187 213 349
cube 2 42 205 212 361
cube 2 42 211 212 365
cube 2 42 212 213 366
cube 2 43 115 208 294
cube 2 43 115 211 297
cube 2 43 190 208 343
cube 2 43 190 211 347
cube 2 43 190 215 351
cube 2 43 208 214 363
cube 2 43 211 214 365
cube 2 43 214 215 367
cube 2 44 119 216 300
cube 2 44 119 217 301
cube 2 44 194 216 352
cube 2 44 194 217 353
cube 2 44 194 218 354
cube 2 44 206 216 360
cube 2 44 206 217 361
cube 2 44 206 218 362
cube 2 45 122 216 300
cube 2 45 122 219 302
cube 2 45 197 216 352
cube 2 45 197 219 355
cube 2 45 197 220 356
cube 2 45 209 216 360
cube 2 45 209 219 363
cube 2 45 209 220 364
cube 2 46 125 217 301
cube 2 46 125 221 303
cube 2 46 200 217 353
cube 2 46 200 221 357
cube 2 46 200 222 358
cube 2 46 212 217 361
cube 2 46 212 221 365
cube 2 46 212 222 366
cube 2 47 127 219 302
cube 2 47 127 221 303
cube 2 47 202 219 355
cube 2 47 202 221 357
cube 2 47 202 223 359
cube 2 47 214 219 363
cube 2 47 214 221 365
cube 2 47 214 223 367
cube 2 48 132 224 306
cube 2 48 132 225 309
cube 2 48 180 226 340
cube 2 48 180 227 341
cube 2 48 224 226 368
cube 2 48 224 227 369
cube 2 48 225 226 370
cube 2 48 225 227 371
cube 2 49 136 224 306
cube 2 49 136 228 312
cube 2 49 184 229 344
cube 2 49 184 230 345
cube 2 49 224 229 368
cube 2 49 224 230 369
cube 2 49 228 229 372
cube 2 49 228 230 373
cube 2 50 140 225 309
cube 2 50 140 231 315
cube 2 50 188 232 348
cube 2 50 188 233 349
cube 2 50 225 232 370
cube 2 50 225 233 371
cube 2 50 231 232 374
cube 2 50 231 233 375
cube 2 51 143 228 312
cube 2 51 143 231 315
cube 2 51 191 234 350
cube 2 51 191 235 351
cube 2 51 228 234 372
cube 2 51 228 235 373
cube 2 51 231 234 374
cube 2 51 231 235 375
cube 2 52 147 236 317
cube 2 52 147 237 319
cube 2 52 195 226 340
cube 2 52 195 238 354
cube 2 52 226 236 368
cube 2 52 226 237 370
cube 2 52 236 238 376
cube 2 52 237 238 377
cube 2 53 150 236 317
cube 2 53 150 239 321
cube 2 53 198 229 344
cube 2 53 198 240 356
cube 2 53 229 236 368
cube 2 53 229 239 372
cube 2 53 236 240 376
cube 2 53 239 240 378
cube 2 54 153 237 319
cube 2 54 153 241 323
cube 2 54 201 232 348
cube 2 54 201 242 358
cube 2 54 232 237 370
cube 2 54 232 241 374
cube 2 54 237 242 377
cube 2 54 241 242 379
cube 2 55 155 239 321
cube 2 55 155 241 323
cube 2 55 203 234 350
cube 2 55 203 243 359
cube 2 55 234 239 372
cube 2 55 234 241 374
cube 2 55 239 243 378
cube 2 55 241 243 379
cube 2 56 159 244 325
cube 2 56 159 245 327
cube 2 56 207 227 341
cube 2 56 207 246 362
cube 2 56 227 244 369
cube 2 56 227 245 371
cube 2 56 244 246 380
cube 2 56 245 246 381
cube 2 57 162 244 325
cube 2 57 162 247 329
cube 2 57 210 230 345
cube 2 57 210 248 364
cube 2 57 230 244 369
cube 2 57 230 247 373
cube 2 57 244 248 380
cube 2 57 247 248 382
cube 2 58 165 245 327
cube 2 58 165 249 331
cube 2 58 213 233 349
cube 2 58 213 250 366
cube 2 58 233 245 371
cube 2 58 233 249 375
cube 2 58 245 250 381
cube 2 58 249 250 383
cube 2 59 167 247 329
cube 2 59 167 249 331
cube 2 59 215 235 351
cube 2 59 215 251 367
cube 2 59 235 247 373
cube 2 59 235 249 375
cube 2 59 247 251 382
cube 2 59 249 251 383
cube 2 60 170 252 332
cube 2 60 170 253 333
cube 2 60 218 238 354
cube 2 60 218 246 362
cube 2 60 238 252 376
cube 2 60 238 253 377
cube 2 60 246 252 380
cube 2 60 246 253 381
cube 2 61 172 252 332
cube 2 61 172 254 334
cube 2 61 220 240 356
cube 2 61 220 248 364
cube 2 61 240 252 376
cube 2 61 240 254 378
cube 2 61 248 252 380
cube 2 61 248 254 382
cube 2 62 174 253 333
cube 2 62 174 255 335
cube 2 62 222 242 358
cube 2 62 222 250 366
cube 2 62 242 253 377
cube 2 62 242 255 379
cube 2 62 250 253 381
cube 2 62 250 255 383
cube 2 63 175 254 334
cube 2 63 175 255 335
cube 2 63 223 243 359
cube 2 63 223 251 367
cube 2 63 243 254 378
cube 2 63 243 255 379
cube 2 63 251 254 382
cube 2 63 251 255 383

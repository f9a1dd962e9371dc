name: three
constants: one=1 zero=0 minus_one=-1
elements: 1 0 -1
table:
1  0  -1
0  0  0
-1 0  1

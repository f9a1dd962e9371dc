name: f1
constants: one=1 zero=0 minus_one=-1
elements: 1 0 -1 x -x x² -x²
generators: x
relations:

name: f1-idem
constants: one=1 zero=0 minus_one=-1
elements: 1 0 -1 x -x
generators: x
relations:
x² = x

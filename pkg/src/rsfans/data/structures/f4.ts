name: f4
constants: one=1 zero=0 minus_one=-1
elements: 1 0 -1 x -x y -y z -z x² -x² xy -xy
generators: x y z
relations:
x² = y²
x²z² = x²
xz = x
z² = 1

"""The lexicographic preorder on Q[X]/(X^2), checked on growing samples."""

from rsfans.pring import LEX, NONNEG_CONSTANT, X, ZERO, dual_sample, support, ts_char_subset_conditions, \
    verify_total_preorder

for N in (2, 5):
    print(verify_total_preorder(LEX, dual_sample(N)).format())

s = support(LEX, dual_sample(3), [(X, ZERO)])
print("support:", ", ".join(map(str, s.support)))
print("radical witness:", s.radical_witness)
print(ts_char_subset_conditions(LEX, LEX, dual_sample(2)).format())
print(ts_char_subset_conditions(NONNEG_CONSTANT, LEX, dual_sample(2)).format())

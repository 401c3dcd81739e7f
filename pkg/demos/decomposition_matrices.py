# Decomposition numbers from stalk Euler characteristics, then the symmetric
# group matrix obtained by transposing labels and keeping l-regular columns.
from nilstalk import decomposition_matrix, symmetric_group_submatrix
from nilstalk.decmatrix import chain_tables, class_vector
from nilstalk.gradedz import prime_field

for name, p in [("sl2", 2), ("sl3", 2), ("sl4-two-two", 3)]:
    print(f"{name}, p={p}: class vectors over F_{p}")
    for t in chain_tables(name, prime_field(p)):
        vec = class_vector(t)
        print("   ", t.strata[0].label, {str(k): v for k, v in vec.items()})
    d = decomposition_matrix(name, p)
    print(d.render())
    print(symmetric_group_submatrix(d, p).render())
    print()

# In the minimal-orbit chain the off-diagonal entry is 1 exactly when p | n.
for n in [4, 5, 6]:
    row = [decomposition_matrix("sln-minimal", p, n).as_lists()[1][0] for p in [2, 3, 5]]
    print(f"n={n}: d[min, 0] for p=2,3,5 ->", row)

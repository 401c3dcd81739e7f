# Characteristic-zero stalks of IC(closure O_lam) at O_mu for all orbits of
# sl_5, read off Kostka-Foulkes polynomials.
from nilstalk import char0_ic_stalk_poly, kostka_foulkes, partitions_of
from nilstalk.partitions import Partition

print("K_{21,111}(q) =", kostka_foulkes(Partition((2, 1)), Partition((1, 1, 1))))

parts = partitions_of(5)
width = max(len(str(p)) for p in parts)
print()
print("stalk polynomials, rows lam, columns mu")
print(" " * width, *(str(m).rjust(12) for m in parts))
for lam in parts:
    cells = [str(char0_ic_stalk_poly(lam, mu)).rjust(12) for mu in parts]
    print(str(lam).ljust(width), *cells)

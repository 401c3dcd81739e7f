# Minimal orbits in sl_n and sp_2n.  The only torsion in H*(O_min, Z) for
# sl_n is Z/n, so the origin stalk over F_p picks up k@-1 exactly when p | n.
from nilstalk import INTEGERS, SlnMinimal, Sp2nMinimal, ic_stalk_table, prime_field
from nilstalk.partitions import column
from nilstalk.stalkcalc import minimal_orbit_cohomology, minimal_reduction_verdict, sp_minimal_orbit_cohomology

for n in range(2, 7):
    print(f"H*(O_min in sl_{n}; Z) =", minimal_orbit_cohomology(n).render())

print()
print("origin stalks over F_p, rows n = 2..6")
for p in [2, 3, 5]:
    k = prime_field(p)
    cells = [ic_stalk_table(SlnMinimal(n), k)[column(n)].render() for n in range(2, 7)]
    print(f"  p={p}:", " | ".join(cells))

# The reflection representation of S_n stays irreducible mod l iff l does not divide n.
print()
for n, ell in [(3, 2), (4, 2), (6, 3), (6, 5)]:
    v = minimal_reduction_verdict(n, ell)
    print(f"S_{n} mod {ell}: irreducible={v.irreducible}, trivial multiplicity={v.trivial_multiplicity}")

# In sp_2n the punctured closure is (C^2n minus 0)/±1, homotopic to RP^(4n-1).
print()
for n in range(1, 4):
    print(f"H*(O_min in sp_{2 * n}; Z) =", sp_minimal_orbit_cohomology(n).render())
    print("   IC+ origin stalk:", ic_stalk_table(Sp2nMinimal(n), INTEGERS, "p+")[column(2 * n)].render())

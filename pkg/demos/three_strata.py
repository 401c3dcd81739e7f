# sl_3 nilpotent cone and the closure of O_(2,2) in sl_4.
#
# Away from the origin both closures are smooth over F_p for the allowed p,
# and a resolution over the punctured closure splits off copies of the
# minimal-orbit cohomology.  Subtracting those copies leaves RΓ(U), and the
# origin stalk is its truncation.
from nilstalk import Sl3Cone, Sl4TwoTwo, ic_stalk_table, prime_field
from nilstalk.cli import render_graded_table, render_stalk_table
from nilstalk.gradedz import change_coefficients
from nilstalk.stalkcalc import sl3_link_tables, sl4_link_tables

for p in [2, 5]:
    k = prime_field(p)
    print(f"sl_3, p={p}")
    print(render_graded_table(sl3_link_tables(k)))
    print(render_stalk_table(ic_stalk_table(Sl3Cone(), k)))
    print()

for p in [3, 5]:
    k = prime_field(p)
    links = sl4_link_tables(k)
    links["Gr(2,4)"] = change_coefficients(links["Gr(2,4)"], k)
    print(f"sl_4 (2,2), p={p}")
    print(render_graded_table(links))
    print(render_stalk_table(ic_stalk_table(Sl4TwoTwo(), k)))
    print()

# The excluded characteristics are refused rather than guessed.
try:
    ic_stalk_table(Sl3Cone(), prime_field(3))
except ValueError as exc:
    print("refused:", exc)

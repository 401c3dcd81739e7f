# The nilpotent cone of sl_2, over every coefficient ring we support.
from nilstalk import INTEGERS, RATIONAL, Sl2Cone, ic_stalk_table, prime_field
from nilstalk.cli import render_stalk_table
from nilstalk.resolutions import pushforward_stalk_table, registered

# Springer resolution T*P^1 -> N: isomorphism over the regular orbit,
# a P^1 over the origin.
print(render_stalk_table(pushforward_stalk_table(registered("springer-sl2"), INTEGERS)))
print()

# The punctured cone retracts onto RP^3, so the origin stalk is a truncation
# of H*(RP^3) shifted by 2.  Over F_2 the torsion survives as an extra k@-1.
for k in [RATIONAL, prime_field(2), prime_field(3)]:
    print(render_stalk_table(ic_stalk_table(Sl2Cone(), k)))
    print()

# Over Z the two perversities differ by where Z/2 is allowed.
for perv in ["p", "p+"]:
    print(render_stalk_table(ic_stalk_table(Sl2Cone(), INTEGERS, perv)))
    print()

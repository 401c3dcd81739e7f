# Complements of zero sections via the Gysin sequence.  With a free even base
# the sequence breaks into a cokernel (even degrees) and a kernel (odd).
from nilstalk.gradedz import prime_field
from nilstalk.gysin import complement_cohomology, cotangent_euler_action, line_bundle_action_on_projective
from nilstalk.spaces import full_flag, grassmannian, projective

actions = [
    cotangent_euler_action(projective(2)),
    cotangent_euler_action(full_flag(3)),
    cotangent_euler_action(grassmannian(2, 4)),
    line_bundle_action_on_projective(3, 2),
]
for a in actions:
    print(f"{a.label:>18}:", complement_cohomology(a).render())

# The same groups computed with mod-p matrices directly.
print()
a = cotangent_euler_action(full_flag(3))
for p in [2, 3, 5]:
    print(f"T*flag:3 over F_{p}:", complement_cohomology(a, prime_field(p)).render())

"""Build the 5-(24,8,1) design from PSL(2,23) and look at its groups."""

from steiner.construct import mathieu_group, sharpness_check, witt_design_via_psl
from steiner.design import derived_design
from steiner.pgl import GroupDescriptor, make_group

D, cert = witt_design_via_psl(23)
print("base block", cert.base_block, "stabilizer order", cert.stabilizer_order)
print("blocks", D.b)

G = make_group(GroupDescriptor("PSL2", 23))
print("PSL(2,23):", sharpness_check(D, G))

M24 = mathieu_group(24)
print("full automorphism group order", M24.order())
print("M24:", sharpness_check(D, M24))

E = D
while E.t > 3:
    E = derived_design(E, E.v - 1)
    print(f"derived {E.t}-({E.v},{E.k},1) with {E.b} blocks")

"""Right ideals as right modules: generation, summands, complements,
homomorphism search, and shared complements.

Ideals are stored extensionally (member sets plus a generator list), so
direct-sum certificates are plain set checks: A (+) B = R means the members
meet only in 0 and the sizes multiply to |R|.
"""

from ringlab import (all_right_ideals, common_complement_idempotent,
                     direct_complements, graph_module, hom_search, ideal_intersect,
                     ideal_sum, is_direct_pair, make_zmod, parse_ring_spec, principal,
                     reconstruct_common_complement, right_annihilator)
from ringlab.ideals import identity_hom

z6 = make_zmod(6)

print("== principal ideals and annihilators in Z_6 ==")
for a in range(6):
    print(f"  {a}R = {sorted(principal(z6, a).members)}   "
          f"r({a}) = {sorted(right_annihilator(z6, a).members)}")

print("\n== the whole lattice of right ideals ==")
for ideal in all_right_ideals(z6):
    print("  members:", sorted(ideal.members), " generators:", ideal.generators)

A = principal(z6, 2)
B = principal(z6, 3)
print("\nsum of 2R and 3R:", sorted(ideal_sum(A, B).members))
print("intersection:", sorted(ideal_intersect(A, B).members))
print("3R is a direct summand with complement(s):",
      [sorted(c.members) for c in direct_complements(B)])

print("\n== homomorphism search ==")
homs = hom_search(B, B)
print(f"{len(homs)} module endomorphisms of 3R:", [h.mapping for h in homs])
isos = hom_search(B, A, require_iso=True)
print("isomorphisms 3R -> 2R:", isos, "(sizes differ, so none)")

print("\n== shared complements in a matrix ring ==")
m2 = parse_ring_spec("M2:Zn:2")
# two different 4-element summands: the first-row and second-row ideals
first_row = principal(m2, 8)    # generated by [[1,0],[0,0]]
second_row = principal(m2, 2)   # generated by [[0,0],[1,0]]
print("A =", sorted(first_row.members))
print("B =", sorted(second_row.members))
found = common_complement_idempotent(first_row, second_row)
if found:
    e, restriction = found
    print("projection idempotent:", e, "maps B onto A via", restriction.mapping)
    W = reconstruct_common_complement(e, first_row, second_row)
    print("(1-e)R =", sorted(W.members), "complements both:",
          is_direct_pair(first_row, W) and is_direct_pair(second_row, W))
else:
    print("no shared complement")

print("\n== graph of a module map ==")
ident = identity_hom(B)
print("graph of the identity on 3R (elements x + x):",
      sorted(graph_module(ident).members))

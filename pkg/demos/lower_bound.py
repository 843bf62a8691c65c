"""Build the lower-bound graphs for small parameters and check their properties.

The size column shows why |V| >= (m'-1)^c never holds: the tree
has c levels, one short of the bound.
"""
from sparsegraph.lowerbound import LbParameterError, check_lb_properties, generate_lb

for k, r, mprime in [(1, 1, 3), (1, 1, 4), (1, 2, 3), (1, 2, 4), (2, 1, 4), (1, 3, 5)]:
    try:
        inst = generate_lb(k, r, mprime)
    except LbParameterError as e:
        print(f"k={k} r={r} m'={mprime}: {e}")
        continue
    rep = check_lb_properties(inst)
    print(f"k={k} r={r} m'={mprime}: c={inst.c} n={inst.graph.n} (bound {rep.size_bound}) "
          f"claim={rep.claim_ok} |B|<=|Z|m'+1: {rep.property_c_ok} worst (|Z|, |B|, limit)={rep.property_c_worst}")

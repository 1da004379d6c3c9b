"""Engine benchmarks on the worked quintic example. Run from repo root."""

import sys
import time

sys.path.insert(0, "src")

from mapfibers.fields import GF, QQ
from mapfibers.poly import parse_polynomial
from mapfibers.rings import GREVLEX, TermOrder, elimination_order, grevlex_with_last, standard_ring
from mapfibers.groebner import normal_form, reduced_groebner

R = standard_ring(["X0", "X1", "X2"])
F_TEXTS = [
    "X0*X1*(X0-X2)*(X0+X2)*(X0-2*X2)",
    "X0*X1*(X1-X2)*(X1+X2)*(X1-2*X2)",
    "X0*X2*(X0-X2)*(X0+X2)*(X0-2*X2)",
    "X1*X2*(X1-X2)*(X1+X2)*(X1-2*X2)",
]
fs = [parse_polynomial(t, R) for t in F_TEXTS]


def clock(label, fn):
    t0 = time.time()
    out = fn()
    print(f"{label}: {time.time() - t0:.2f}s")
    return out


# sanity: tiny GB
R2 = standard_ring(["X0", "X1"])
g = reduced_groebner([parse_polynomial("X0^2", R2), parse_polynomial("X0*X1+X1^2", R2)])
print("tiny GB:", [str(p) for p in g])

gb = clock("GB(I) grevlex QQ", lambda: reduced_groebner(fs))
print("  size:", len(gb), "degs:", sorted(p.degree() for p in gb))
print("  membership of f0*X2+f1*X0:", normal_form(fs[0] * parse_polynomial("X2", R) + fs[1] * parse_polynomial("X0", R), gb).is_zero())

# I^2
sq = [fs[i] * fs[j] for i in range(4) for j in range(i, 4)]
gb2 = clock("GB(I^2) grevlex QQ", lambda: reduced_groebner(sq))
print("  size:", len(gb2), "degs:", sorted(p.degree() for p in gb2))

# saturation by last variable via reordered grevlex
for v in range(3):
    o = grevlex_with_last(3, v)
    gbv = clock(f"GB(I^2) grevlex-last-X{v}", lambda o=o: reduced_groebner(sq, o))
    print(f"  size: {len(gbv)}")

# I^3
cu = [fs[i] * fs[j] * fs[k] for i in range(4) for j in range(i, 4) for k in range(j, 4)]
gb3 = clock("GB(I^3) grevlex QQ", lambda: reduced_groebner(cu))
print("  size:", len(gb3))

# Rees elimination: k[X,T,t], eliminate t, over QQ
from mapfibers.rings import RingDescriptor
from mapfibers.poly import Polynomial

S = RingDescriptor(("X0", "X1", "X2", "T0", "T1", "T2", "T3", "t"), QQ,
                   (((1,),) * 3 + ((6,),) * 4 + ((1,),)))
t_idx = 7
tv = Polynomial.variable(S, t_idx)
gens = []
for j, f in enumerate(fs):
    fp = Polynomial(S, {m + (0, 0, 0, 0, 0): c for m, c in f.terms.items()})
    tj = Polynomial.variable(S, 3 + j)
    gens.append(tj - tv * fp)

if "--rees" in sys.argv:
    elim_t = elimination_order({t_idx})
    gbr = clock("Rees elimination GB (8 vars, QQ)",
                lambda: reduced_groebner(gens, elim_t, weights=(1, 1, 1, 6, 6, 6, 6, 1)))
    kept = [p for p in gbr if all(m[t_idx] == 0 for m in p.terms)]
    print("  GB size:", len(gbr), " t-free:", len(kept))
    bidegs = sorted({(sum(m[:3]), sum(m[3:7])) for p in kept for m in [next(iter(p.terms))]})
    print("  sample bidegrees:", bidegs[:10])

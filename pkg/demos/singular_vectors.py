"""Show the closed-form singular vectors at one point next to what the
kernel search finds there.

    python3 demos/singular_vectors.py 7 2 stand
"""
import sys

from cherednik import closedform as cf
from cherednik.verma import build_irreducible, make_params


def main(p, c, tau):
    P = make_params(p, 1, c, tau)
    st = build_irreducible(P)
    print("search:", cf.generator_profile(st))
    try:
        gens = cf.closed_form_generators(P)
    except NotImplementedError as e:
        print(e)
        return
    for g in gens:
        terms = g.serialize()
        shown = " + ".join(terms[:4]) + (" + ..." if len(terms) > 4 else "")
        print(f"degree {g.degree:3} singular={cf.is_singular(g)}  {shown}")
    print(cf.compare_with_search(P, st))


if __name__ == "__main__":
    a = sys.argv[1:] or ["7", "2", "stand"]
    c = a[1] if a[1] == "generic" else int(a[1])
    main(int(a[0]), c, a[2])

"""Print the Hilbert polynomial and dimension of every L_{1,c}(tau) for one prime.

    python3 demos/tables.py 7
"""
import sys

from cherednik import closedform as cf
from cherednik.rep3 import labels_for
from cherednik.verma import build_irreducible, hilbert, make_params


def main(p):
    for c in list(range(p)) + ["generic"]:
        for tau in labels_for(p):
            P = make_params(p, 1, c, tau)
            h = hilbert(build_irreducible(P))
            exp = cf.expected_results(p, 1, P.c, P.tau)
            flag = "" if h == exp.hilbert else "  <- differs from table"
            tag = " (conj)" if exp.conjectural else ""
            print(f"c={c!s:8} {tau:6} dim {sum(h):5}  {' '.join(map(str, h))}{tag}{flag}")


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 5)

"""Smoke tests for the python bindings."""

import fourgen


def main():
    t = fourgen.construct("theta0", d=2, q=3)
    assert t.size == 5 and t.n == 3 and t.q == 3
    rep = fourgen.verify(t, complete=True)
    assert rep["four_general"] and rep["complete"]

    eq = fourgen.construct("elliptic_quadric", q=2)
    cp = fourgen.code_params(eq)
    assert (cp["N"], cp["k"], cp["d"], cp["rho"]) == (5, 1, 5, 2)

    b = fourgen.bounds(4, 3)
    assert b["m3_upper"] == 11 and b["m3_equality_case"]

    y = fourgen.construct("htw_y", d=2)
    done = fourgen.greedy_complete(y)
    assert done.size == 11
    assert fourgen.aut_order(done) == 7920

    cls = fourgen.classify(3, 2)
    assert len(cls["classes"]) == 1 and cls["classes"][0]["aut"] == 120
    assert cls["consistency"]

    g = fourgen.secant_graph_params(eq)
    assert g["triangular"] and g["vertices"] == 10

    assert fourgen.cubic1_count(16) == 13

    tc = fourgen.construct("twisted_cubic", q=5)
    assert fourgen.are_equivalent(tc, tc)
    cands = fourgen.extension_candidates(y)
    assert len(cands) == 2

    print("python smoke: all checks passed")


if __name__ == "__main__":
    main()

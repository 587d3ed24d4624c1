"""Smoke test for the jcrystal_py extension.

Run after `maturin develop -m crates/py/Cargo.toml`, or after
`cargo build --release -p jcrystal-py --features extension-module`, in which
case the shared library is loaded straight from target/release.
"""

import importlib.machinery
import importlib.util
import pathlib
import sys


def load():
    try:
        import jcrystal_py

        return jcrystal_py
    except ImportError:
        root = pathlib.Path(__file__).resolve().parent.parent
        for profile in ("release", "debug"):
            lib = root / "target" / profile / "libjcrystal_py.so"
            if lib.exists():
                loader = importlib.machinery.ExtensionFileLoader("jcrystal_py", str(lib))
                spec = importlib.util.spec_from_loader("jcrystal_py", loader)
                module = importlib.util.module_from_spec(spec)
                loader.exec_module(module)
                return module
        sys.exit("jcrystal_py is not built; see the module docstring")


def main():
    jc = load()

    # rational functions
    q = jc.RatFunc("q")
    assert str(jc.qint(2)) == str(q + jc.RatFunc("q^-1"))
    assert (jc.RatFunc("p*q") / jc.RatFunc("q")) == jc.RatFunc("p")
    assert jc.RatFunc("p + q^-1").bar() == jc.RatFunc("p^-1 + q")

    # signed permutations act on the right
    x, y = jc.SignedPerm([-2, 1]), jc.SignedPerm([2, -1])
    t = [10, 20]
    assert (x * y).act(t) == y.act(x.act(t))
    assert x.length() == len(x.reduced_word())

    # the vector representation at r = 1 splits as sizes 2 + 1
    assert jc.decompose(1, 1) == {"(0,0;1)": 1, "(1,0;0)": 1}
    dec = jc.decompose(1, 2)
    assert sorted(dec.values()) == [1, 1, 1, 2]
    total = sum(m * jc.Bipartition(s).count_sst() for s, m in dec.items())
    assert total == 9

    # crystal operators
    assert jc.jop([0], 1, "f") == [-1]
    assert jc.jop([-1], 1, "f") is None
    assert jc.crystal_op([0], 1, "f") == [1]
    assert jc.is_yamanouchi([0], 1)

    # highest-weight data
    lam = jc.Bipartition.from_pi([2, 2, 3], [2, 0, 1])
    assert str(lam) == "(4,2,2,1;4,2,0)"
    assert lam.pi() == ([2, 2, 3], [2, 0, 1])

    # LR and branching
    empty = jc.Bipartition("(;)", 1)
    assert jc.lr_coefficients(empty, [1]) == jc.branching([1], 1)

    # KL basis and cells
    c = jc.kl_basis(jc.SignedPerm([-1]))
    assert {tuple(w): str(v) for w, v in c} == {(-1,): "1", (1,): "p"}
    cells, agree = jc.left_cells(2)
    assert len(cells) == 6 and agree

    ok, report = jc.verify_suite(1, 1, ["defrel", "hecke"])
    assert ok, report

    try:
        jc.Bipartition("(1,2;)")
    except ValueError:
        pass
    else:
        raise AssertionError("non-partition accepted")

    print("jcrystal_py smoke test: ok")


if __name__ == "__main__":
    main()

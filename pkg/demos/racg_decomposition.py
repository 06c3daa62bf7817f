"""Right-angled Coxeter groups from defining graphs: words, balls, verdicts.

The induced squares of the defining graph seed a merge-and-close iteration
whose fixed point is the canonical join decomposition; the group is
hyperbolic relative to those members unless the iteration swallows the
whole graph.

Run with: python3 demos/racg_decomposition.py
"""

from cubekit.racg import (
    DefiningGraph,
    ball,
    contracting_generators,
    j_sequence,
    normal_form,
    relhyp_report,
)

C4 = (list("abcd"), [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")])
C5 = (list("abcde"), [("a", "b"), ("b", "c"), ("c", "d"), ("d", "e"), ("e", "a")])
TWO_SQUARES = (
    ["a1", "a2", "a3", "a4", "m", "b1", "b2", "b3", "b4"],
    [
        ("a1", "a2"), ("a2", "a3"), ("a3", "a4"), ("a4", "a1"),
        ("b1", "b2"), ("b2", "b3"), ("b3", "b4"), ("b4", "b1"),
        ("a1", "m"), ("m", "b1"),
    ],
)


def show(name, spec):
    dg = DefiningGraph(*spec)
    rep = relhyp_report(dg)
    print(f"{name}:")
    print(f"  squares: {[''.join(s) for s in dg.induced_squares()] or 'none'}")
    trace = " -> ".join(
        "{" + ", ".join("".join(sorted(m)) for m in step) + "}" for step in rep.decomposition.trace
    )
    print(f"  join iteration: {trace or '(empty)'}")
    print(f"  relatively hyperbolic: {rep.relatively_hyperbolic}")
    print(f"  peripherals: {[sorted(m) for m in rep.peripherals]}")
    print(f"  {rep.meaning}")
    print()


def main():
    # the word problem: involutions plus commutation along edges
    dg = DefiningGraph(*C4)
    for word in (["a", "b", "a"], ["a", "c", "a", "c"], ["a", "b", "c", "b", "a"]):
        nf = normal_form(dg, word)
        print(f"  {' '.join(word)}  ->  {nf or '(identity)'}")
    print()

    b = ball(dg, 2)
    print(f"radius-2 ball of the C4 group: {b.graph.n} vertices, "
          f"{len(b.graph.edges)} edges, median: {b.graph.is_median().ok}")
    print()

    show("C4 (square)", C4)
    show("C5 (pentagon)", C5)
    show("two squares joined by a path", TWO_SQUARES)

    rep = contracting_generators(DefiningGraph(*TWO_SQUARES))
    flat = sorted(v for v, c in rep.contracting if not c)
    thin = sorted(v for v, c in rep.contracting if c)
    print(f"contracting generators: {thin}")
    print(f"square-bound generators: {flat}")


if __name__ == "__main__":
    main()

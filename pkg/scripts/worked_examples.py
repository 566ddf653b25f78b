"""Run the worked examples and print what each one shows.

    python scripts/worked_examples.py
"""

from braidlift.braid import ColoredBraid, parse_braid, parse_labels
from braidlift.complex import build_xg_ball, build_xm, check_covering, two_cell_inventory
from braidlift.cover import cover_info
from braidlift.graphical import apply_morphism, canonical_object
from braidlift.lift import classify, compose_lifts, compute_lift, h1_action, identity_lift, is_identity


def lift(labels, word):
    tau = parse_labels(labels)
    return compute_lift(ColoredBraid(tau, parse_braid(word, tau.n)))


def disc_cube():
    print("== disc cover, d=3, labels (1 2),(2 3)")
    tau = parse_labels("d=3 (1 2),(2 3)")
    o = canonical_object(tau)
    for k in range(4):
        print(f"  s1^{k}: {apply_morphism(o, parse_braid('s1 ' * k, tau.n))}")
    print(f"  lift of s1^3 is the identity: {is_identity(lift('d=3 (1 2),(2 3)', 's1^3'))}")


def annulus_twist():
    print("== annulus, d=3, labels (1 2),(1 2),(2 3)")
    labels = "d=3 (1 2),(1 2),(2 3)"
    f = lift(labels, "s1")
    print(f"  {f}")
    print(f"  s1 then s2^3 lifts to the same map: {lift(labels, 's1 s2^3') == f}")
    print(f"  flags: {classify(f)}")


def cycle_twist():
    print("== twist about a 4-cycle, d=4, labels (1 2),(2 3),(3 4),(1 4)")
    labels = "d=4 (1 2),(2 3),(3 4),(1 4)"
    single = lift(labels, "s1^-1 s2^-1 s3 s2 s1")
    acc = identity_lift(single.source)
    for n in (1, 2, 3):
        acc = compose_lifts(single, acc)
        f = lift(labels, f"s1^-1 s2^-1 s3^{n} s2 s1")
        print(f"  n={n}: equals n-th power of n=1 case: {f == acc}; H1 action {h1_action(f)}")


def torus_complex():
    print("== one-holed torus, d=3, labels (1 2),(2 3),(2 3),(2 3)")
    tau = parse_labels("d=3 (1 2),(2 3),(2 3),(2 3)")
    info = cover_info(tau)
    print(f"  genus {info['genus']}, boundary cycles {info['boundary_cycles']}")
    xm = build_xm(tau)
    inv = two_cell_inventory(tau, xm)
    base = sorted({f"{kind}: {w}" for v, kind, w in inv.all_cells() if v == xm.base})
    print(f"  label complex: {len(xm.vertices)} vertices; cells at the base vertex:")
    for cell in base:
        print(f"    {cell}")
    rep = check_covering(build_xg_ball(tau, 3), xm)
    print(f"  covering checks on the radius-3 ball: {'ok' if rep.ok else rep.to_json()}")
    for word in ("s3", "s2"):
        print(f"  H1 action of {word}: {h1_action(lift('d=3 (1 2),(2 3),(2 3),(2 3)', word))}")


if __name__ == "__main__":
    disc_cube()
    annulus_twist()
    cycle_twist()
    torus_complex()

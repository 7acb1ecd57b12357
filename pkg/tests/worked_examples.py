"""Shared fixtures: small curated scenarios used across the test suite.

Each fixture is a small valid t-net plus markings, with the expected
pid-trees built explicitly node by node, so a fixture bug cannot hide
behind the code under test.

Design note on the dead-sibling example: the leader's spawn counter
must be 3, not 2.  With counter 2 the next pid sits right after the
surviving sibling on one side only (gap 3-2=1 versus 3-1=2), so the
stripped trees differ in an offset class and the underlying states are
genuinely inequivalent (an immediate-sibling pair would map onto a
non-immediate one).  Counter 3 puts a wide gap on both sides, which is
what makes stripping merge the pair while the expanded trees still
differ.
"""

from __future__ import annotations

from pidsym import Marking, PlaceDecl, Pid, PidTree, TNet

P = Pid.parse


def leaf(marking: Marking | None = None) -> PidTree:
    return PidTree(marking)


def tree(marking: Marking | None, *children) -> PidTree:
    return PidTree(marking, [(P(frag), sub) for frag, sub in children])


def _net(name: str, *places: PlaceDecl) -> TNet:
    decls = (PlaceDecl("g", ("P", "D"), generator=True),) + places
    return TNet(
        name=name,
        places=decls,
        transitions=(),
        init=Marking({"g": [(P("1"), 0)]}),
    )


# -- inclusion and path examples ---------------------------------------------

NET_OWN = _net("ownnet", PlaceDecl("sh", ("D",)), PlaceDecl("own", ("P", "D")))

M1 = Marking({"sh": [(7,), (8,)]})
M1_SUB = Marking({"sh": [(7,)]})  # a strict sub-marking of M1
M2 = Marking({"own": [(P("1.1"), 2)]})
M3 = Marking({"own": [(P("1.2.1.3"), 3)]})
M4 = Marking({"own": [(P("1.1.1"), 4)]})

INCL_WIDE = tree(
    M1,
    ("1", tree(
        None,
        ("2.1", tree(None, ("3", leaf(M3)))),
        ("1", tree(M2, ("1", leaf(M4)), ("2", leaf()))),
    )),
)

INCL_NARROW = tree(
    M1_SUB,
    ("1", tree(None, ("1", tree(None, ("1", leaf(M4)), ("2", leaf()))))),
)

PATH_EXPANDED = tree(None, ("1", tree(None, ("1", tree(None, ("1", leaf(M4)))))))
PATH_SINGLE = tree(None, ("1.1.1", leaf(M4)))


# -- one marking, its expanded and stripped representations ------------------

NET_BASE = _net("base", PlaceDecl("s1", ("D",)), PlaceDecl("s2", ("P",)))

TWOREP_MARKING = Marking(
    {
        "s1": [(12,)],
        "s2": [(P("1"),), (P("1.1.2"),)],
        "g": [(P("1"), 1), (P("1.1.2"), 0)],
    }
)

TWOREP_EXPANDED = tree(
    Marking({"s1": [(12,)]}),
    ("1", tree(
        Marking({"s2": [(P("1"),)]}),
        ("1", tree(None, ("2", tree(Marking({"s2": [(P("1.1.2"),)]}), ("1", leaf()))))),
        ("2", leaf()),
    )),
)

TWOREP_STRIPPED = tree(
    Marking({"s1": [(12,)]}),
    ("1", tree(
        Marking({"s2": [(P("1"),)]}),
        ("2", leaf()),
        ("1.2", tree(Marking({"s2": [(P("1.1.2"),)]}), ("1", leaf()))),
    )),
)


# -- the four-tree renaming example (quad) -----------------------------------

NET_QUAD = _net("quad", PlaceDecl("s1", ("P",)), PlaceDecl("s2", ("P", "P", "P")))

_M1 = {"s1": [(P("1"),)]}


def _quad_marking(token, counters) -> Marking:
    return Marking({**_M1, "s2": [tuple(P(x) for x in token)], "g": [(P(p), k) for p, k in counters]})


QUAD_T1_MARKING = _quad_marking(("1.1", "1.2.1", "1.2.2"), [("1", 2), ("1.1", 0)])
QUAD_T2_MARKING = _quad_marking(("1.4", "1.3.1", "1.3.2"), [("1", 6), ("1.4", 1)])
QUAD_T3_MARKING = _quad_marking(("1.4", "1.3.1", "1.3.2"), [("1", 4), ("1.4", 1)])
QUAD_T4_MARKING = _quad_marking(("1.4", "1.3.1", "1.3.3"), [("1", 5), ("1.4", 1)])


def _m1() -> Marking:
    return Marking(_M1)


def _s2(*pids: str) -> Marking:
    return Marking({"s2": [tuple(P(x) for x in pids)]})


QUAD_T1 = tree(
    None,
    ("1", tree(
        _m1(),
        ("1", tree(_s2("1.1", "1.2.1", "1.2.2"), ("1", leaf()))),
        ("3", leaf()),
        ("2.1", leaf()),
        ("2.2", leaf()),
    )),
)

QUAD_T2 = tree(
    None,
    ("1", tree(
        _m1(),
        ("4", tree(_s2("1.4", "1.3.1", "1.3.2"), ("2", leaf()))),
        ("7", leaf()),
        ("3.1", leaf()),
        ("3.2", leaf()),
    )),
)

QUAD_T3 = tree(
    None,
    ("1", tree(
        _m1(),
        ("4", tree(_s2("1.4", "1.3.1", "1.3.2"), ("2", leaf()))),
        ("5", leaf()),
        ("3.1", leaf()),
        ("3.2", leaf()),
    )),
)

QUAD_T4 = tree(
    None,
    ("1", tree(
        _m1(),
        ("4", tree(_s2("1.4", "1.3.1", "1.3.3"), ("2", leaf()))),
        ("6", leaf()),
        ("3.1", leaf()),
        ("3.3", leaf()),
    )),
)

QUAD_EXPECTED_H = {
    P("1"): P("1"),
    P("1.1"): P("1.4"),
    P("1.3"): P("1.7"),
    P("1.2.1"): P("1.3.1"),
    P("1.2.2"): P("1.3.2"),
    P("1.1.1"): P("1.4.2"),
}


# -- dead siblings: markings merged only after stripping ---------------------

NET_DEADSIB = _net("deadsib", PlaceDecl("sh", ("D",)), PlaceDecl("own", ("P", "D")))


def _deadsib_marking(owners: dict, counters) -> Marking:
    return Marking(
        {
            "sh": [(10,)],
            "own": [(P(p), tag) for p, tag in owners.items()],
            "g": [(P(p), k) for p, k in counters],
        }
    )


# Marking tags make the node markings distinguishable: the pid owning
# the n-th marking carries tag n.  The shared token is tag 10.
DEADSIB_A_MARKING = _deadsib_marking(
    {"1": 2, "1.2": 3, "1.1.1": 4, "1.2.1": 5},
    [("1", 3), ("1.2", 1), ("1.1.1", 0), ("1.2.1", 0)],
)
DEADSIB_B_MARKING = _deadsib_marking(
    {"1": 2, "1.1": 3, "1.1.1": 5, "1.2.1": 4},
    [("1", 3), ("1.1", 1), ("1.1.1", 0), ("1.2.1", 0)],
)


def _own(p: str, tag: int) -> Marking:
    return Marking({"own": [(P(p), tag)]})


DEADSIB_A_STRIPPED = tree(  # stripped form of the first dead-sibling marking
    Marking({"sh": [(10,)]}),
    ("1", tree(
        _own("1", 2),
        ("2", tree(_own("1.2", 3), ("1", tree(_own("1.2.1", 5), ("1", leaf()))), ("2", leaf()))),
        ("4", leaf()),
        ("1.1", tree(_own("1.1.1", 4), ("1", leaf()))),
    )),
)

DEADSIB_B_STRIPPED = tree(  # stripped form of the second dead-sibling marking
    Marking({"sh": [(10,)]}),
    ("1", tree(
        _own("1", 2),
        ("1", tree(_own("1.1", 3), ("1", tree(_own("1.1.1", 5), ("1", leaf()))), ("2", leaf()))),
        ("4", leaf()),
        ("2.1", tree(_own("1.2.1", 4), ("1", leaf()))),
    )),
)


# -- cross-referencing tokens: equivalent states stripping cannot merge ------

NET_XREF = _net("xref", PlaceDecl("pair", ("P", "P")))

XREF_A_MARKING = Marking(
    {
        "pair": [(P("1.1.1"), P("1.2.1")), (P("1.2.1"), P("1"))],
        "g": [(P("1"), 2), (P("1.1.1"), 0), (P("1.2.1"), 0)],
    }
)
XREF_B_MARKING = Marking(
    {
        "pair": [(P("1.1.1"), P("1")), (P("1.2.1"), P("1.1.1"))],
        "g": [(P("1"), 2), (P("1.1.1"), 0), (P("1.2.1"), 0)],
    }
)

XREF_A_STRIPPED = tree(
    None,
    ("1", tree(
        None,
        ("3", leaf()),
        ("1.1", tree(Marking({"pair": [(P("1.1.1"), P("1.2.1"))]}), ("1", leaf()))),
        ("2.1", tree(Marking({"pair": [(P("1.2.1"), P("1"))]}), ("1", leaf()))),
    )),
)

XREF_B_STRIPPED = tree(
    None,
    ("1", tree(
        None,
        ("3", leaf()),
        ("1.1", tree(Marking({"pair": [(P("1.1.1"), P("1"))]}), ("1", leaf()))),
        ("2.1", tree(Marking({"pair": [(P("1.2.1"), P("1.1.1"))]}), ("1", leaf()))),
    )),
)

"""The bundled example models.

Each model exercises one regime of the reduction:

* ``spawn_reap``  - a leader forever spawns short-lived workers under a
  capacity bound: infinitely many concrete markings, finitely many
  stripped classes.
* ``fanout_n``    - the leader starts n single-use delegates; each
  delegate begets one worker and dies, leaving the workers mutually
  unrelated.  Interleavings explode concretely but collapse under the
  stripped keys.  The parameter n is a build-time integer: fanout_text
  generates the model text and fanout_n.tnet ships the n=3 instance.
* ``clean_join``  - children wait for their own grandchild before dying,
  so every reachable marking is clean and the stripped quotient is
  exact.
* ``ring``        - workers hand a token along the immediate-sibling
  chain; fully deterministic, so no mode can merge anything.
"""

from __future__ import annotations

from importlib import resources

from ..net import TNet
from ..parser import parse_model

__all__ = ["MODEL_NAMES", "model_text", "load_model", "fanout_text"]

MODEL_NAMES = ("spawn_reap", "fanout_n", "clean_join", "ring")


SPAWN_REAP = """\
# A leader spawns workers that start, work and die; at most two alive.
net spawn_reap
place g GEN
place seed D
place boss P
place cap D
place idle P
place busy P
init seed { (0) }
init cap { (0); (0) }
trans lead
  in g { (p, c) }
  in seed { (0) }
  out g { (p, c) }
  out boss { (p) }
end
trans spawn
  in g { (b, c) }
  in boss { (b) }
  in cap { (0) }
  out g { (b, c+1); (b.(c+1), 0) }
  out boss { (b) }
  out idle { (b.(c+1)) }
end
trans start
  in g { (w, d) }
  in idle { (w) }
  out g { (w, d) }
  out busy { (w) }
end
trans reap
  in g { (w, d) }
  in busy { (w) }
  out cap { (0) }
end
"""


CLEAN_JOIN = """\
# Children delegate to one grandchild each and join it before dying:
# parents always outlive their children, so every marking is clean.
net clean_join
place g GEN
place seed D
place boss P
place task D
place child P
place waiting P
place gwork P
place done P
init seed { (0) }
init task { (0); (0) }
trans lead
  in g { (p, c) }
  in seed { (0) }
  out g { (p, c) }
  out boss { (p) }
end
trans spawn
  in g { (b, c) }
  in boss { (b) }
  in task { (0) }
  out g { (b, c+1); (b.(c+1), 0) }
  out boss { (b) }
  out child { (b.(c+1)) }
end
trans delegate
  in g { (w, d) }
  in child { (w) }
  out g { (w, d+1); (w.(d+1), 0) }
  out gwork { (w.(d+1)) }
  out waiting { (w) }
end
trans complete
  in g { (v, e) }
  in gwork { (v) }
  out g { (v, e) }
  out done { (v) }
end
trans join
  in g { (w, d); (v, e) }
  in waiting { (w) }
  in done { (v) }
  guard w <1 v
end
"""


RING = """\
# Three workers spawned at once pass a token along the sibling chain.
net ring
place g GEN
place go D
place tok P
init go { (0) }
trans setup
  in g { (p, c) }
  in go { (0) }
  out g { (p, c+3); (p.(c+1), 0); (p.(c+2), 0); (p.(c+3), 0) }
  out tok { (p.(c+1)) }
end
trans pass
  in g { (u, cu); (v, cv) }
  in tok { (u) }
  guard u #1 v
  out g { (u, cu); (v, cv) }
  out tok { (v) }
end
"""


def fanout_text(n: int) -> str:
    """The fanout model for a given worker count n >= 1."""
    if n < 1:
        raise ValueError("fanout needs n >= 1")
    tasks = "; ".join("(0)" for _ in range(n))
    return f"""\
# The leader starts {n} delegates; each begets one worker and dies,
# so the workers end up pairwise unrelated and fully interchangeable.
net fanout_n
place g GEN
place seed D
place boss P
place task D
place mid P
place work P
init seed {{ (0) }}
init task {{ {tasks} }}
trans lead
  in g {{ (p, c) }}
  in seed {{ (0) }}
  out g {{ (p, c) }}
  out boss {{ (p) }}
end
trans spawn
  in g {{ (b, c) }}
  in boss {{ (b) }}
  in task {{ (0) }}
  out g {{ (b, c+1); (b.(c+1), 0) }}
  out boss {{ (b) }}
  out mid {{ (b.(c+1)) }}
end
trans beget
  in g {{ (q, d) }}
  in mid {{ (q) }}
  out g {{ (q.(d+1), 0) }}
  out work {{ (q.(d+1)) }}
end
trans finish
  in g {{ (w, e) }}
  in work {{ (w) }}
end
"""


_TEXTS = {
    "spawn_reap": SPAWN_REAP,
    "clean_join": CLEAN_JOIN,
    "ring": RING,
    "fanout_n": fanout_text(3),
}


def model_text(name: str) -> str:
    """The text of a bundled model, from package data when present."""
    try:
        return resources.files("pidsym.models").joinpath(f"{name}.tnet").read_text()
    except (FileNotFoundError, ModuleNotFoundError):
        return _TEXTS[name]


def load_model(name: str, n: int | None = None) -> TNet:
    """Parse a bundled model; ``n`` regenerates fanout_n at another width."""
    if name == "fanout_n" and n is not None:
        return parse_model(fanout_text(n))
    return parse_model(model_text(name))

"""Small reference frameworks used by the tests, the suite and the docs.

``F0``..``F5`` are SBAF files shipped next to this module; ``B1`` is a plain
bipolar framework and only exists as an object.
"""

from importlib import resources

from ..bipolar import BAF
from ..fileformat import parse_text

SBAF_FIXTURES = ("F0", "F1", "F2", "F3", "F4", "F5")


def path(name):
    return resources.files(__name__).joinpath(f"{name}.sbaf")


def text(name):
    if name not in SBAF_FIXTURES:
        raise KeyError(f"no fixture {name!r}; known: {', '.join(SBAF_FIXTURES)}")
    return path(name).read_text(encoding="utf-8")


def load(name):
    return parse_text(text(name), path=f"<fixture {name}>")


def b1():
    """Five arguments; a3 supports a2, giving one mediated and one supported attack."""
    return BAF(
        ("a1", "a2", "a3", "a4", "a5"),
        attack={("a1", "a2"), ("a2", "a4"), ("a5", "a1")},
        support={("a3", "a2")},
    )

"""Access to the bundled fixture corpus.

The fixtures are hand-transcribed structure-constant tables for the
three-dimensional special linear algebra over Q(i): its bracket, Killing
form, a weight-one Rota-Baxter operator with the induced post-Lie
product, a compatible two-sided splitting, a weight-zero operator with
the induced quarter splitting, the six-dimensional double it generates,
the canonical antisymmetric tensor on the double and the resulting
comultiplications.
"""

from __future__ import annotations

import os
from importlib import resources

from .documents import Document, load, loads

__all__ = ["CORPUS_NAMES", "corpus_text", "corpus_doc", "corpus_dir_doc", "write_corpus"]

CORPUS_NAMES = (
    "sl2_lie",
    "kappa",
    "sl2_P",
    "sl2_postlie",
    "sl2_pp",
    "sl2_pp_broken",
    "final_P",
    "final_prepp",
    "ahat_pp",
    "r6",
    "final_cobrackets",
)


def corpus_text(name: str) -> str:
    if name not in CORPUS_NAMES:
        raise KeyError("unknown corpus fixture %r" % name)
    ref = resources.files("postlie").joinpath("corpus/%s.txt" % name)
    return ref.read_text(encoding="utf-8")


def corpus_doc(name: str) -> Document:
    return loads(corpus_text(name))


def corpus_dir_doc(directory: str, name: str) -> Document:
    """Load a fixture from an on-disk corpus directory instead of the bundle."""
    return load(os.path.join(directory, name + ".txt"))


def write_corpus(directory: str) -> list:
    """Materialise every bundled fixture into a directory; returns the paths."""
    os.makedirs(directory, exist_ok=True)
    paths = []
    for name in CORPUS_NAMES:
        path = os.path.join(directory, name + ".txt")
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(corpus_text(name))
        paths.append(path)
    return paths

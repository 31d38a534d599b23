"""semclone: file-level semantic clone detection.

Two detection channels over a source tree, combinable into a hybrid
pipeline:

* a comment channel that topic-models normalized code comments and groups
  files sharing a dominant topic, and
* a code channel that mines maximal frequent subgraphs from program
  dependence graphs and groups the files a pattern spans.

Detected groups are scored against a ground-truth file with two
precision/recall protocols (flattened-union and per-set best-match).
"""

from semclone.clonesets import CloneSet, Provenance

__version__ = "0.1.0"

__all__ = ["CloneSet", "Provenance", "__version__"]

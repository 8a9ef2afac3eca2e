"""Cut-rank, r-split hypergraphs, closures and r-orthogonality.

Vertex sets are lists of 1-based labels; hypergraphs are lists of such lists.
"""

from ._rsplit import *  # noqa: F401,F403
from ._rsplit import __doc__  # noqa: F401

"""Region-partition optimal path search.

Thin python surface over the C++ core: graph generators, region partition,
hybrid exploration and its evolutionary relaxation, enumeration baselines,
polygon-inequality statistics, dynamic weight systems, and the experiment
harness.
"""

from ._core import *  # noqa: F401,F403
from ._core import __doc__ as _core_doc

__all__ = [name for name in dir() if not name.startswith("_")]
__doc__ = (__doc__ or "") + "\n\n" + (_core_doc or "")

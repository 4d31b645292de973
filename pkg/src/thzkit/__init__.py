"""thzkit: terahertz material, plasmonic, nanoantenna and link-budget models."""

__version__ = "0.1.0"

from .errors import ThzkitError  # noqa: F401
from .quantities import CONST, parse_quantity  # noqa: F401

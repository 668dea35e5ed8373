"""Top-level package for dalpha"""
from ._version import get_versions

__version__ = get_versions()["version"]
del get_versions

from .enumeration import CanonicalForm
from .enumeration import FamilySpec
from .enumeration import canonical_form
from .enumeration import enumerate_family
from .graph import Graph
from .graph import distance_profile
from .spectral import build_d_alpha
from .spectral import spectral_radius

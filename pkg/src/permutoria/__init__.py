"""Pattern-avoiding permutations, generating graphs and tableau involutions.

Every counting formula, generating function, bijection and tableau identity
in this package is cross-checked against brute-force oracles; see the
``verify`` command of the CLI.
"""

from .kernels import engine_name

__version__ = "0.1.0"
__all__ = ["engine_name", "__version__"]

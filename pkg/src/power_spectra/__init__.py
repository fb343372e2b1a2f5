"""Power graphs of finite groups: spectra and spectral-radius bounds."""

from ._backend import BACKEND_NAME

__all__ = ["BACKEND_NAME"]
__version__ = "0.1.0"

# PyDRTracker/fourier/__init__.py

from .spectrum import Spectrum, fft2, ifft2, cross_correlate

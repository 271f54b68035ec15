"""excursionlab: simulation and verification of Brownian excursion point
processes in the unit disk — kernels, trace-exact samplers, tube-crossing
events, chord-diagram combinatorics and a deterministic Monte Carlo engine."""

__version__ = "0.1.0"

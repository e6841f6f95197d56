"""toricnet: exact mass-action reaction network analysis, noncommutative
symmetric functions and their Hopf structures, free-probability cumulant
transforms, and quasitoric characteristic number evaluation, with a bridge
taking deficiency-zero networks to projective-space characteristic classes.
"""

__version__ = "0.1.0"

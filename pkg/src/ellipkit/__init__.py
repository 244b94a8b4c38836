"""Real-argument elliptic integrals, Jacobian elliptic functions, theta
functions and friends, with a registry-driven elemental API and a CLI.

Scalar functions follow the parameter convention: the elliptic parameter
m = k^2 is always the last argument of the m-prefixed names; the same
name without the leading ``m`` takes the modulus k instead.  Out-of-domain
input returns NaN; one-sided poles return signed infinity.
"""

from .bulirsch import cel, cel1, cel2, cel3, el1, el2, el3
from .carlson import rc, rd, rf, rg, rj
from .core import Tolerances, k_wrapper
from .demos import (CantileverConfig, CantileverResult, CurveSample,
                    ElasticaConfig, cantilever_solve, elastica_curve)
from .integrals import (mHlambda, melB, melC, melCE, melCK, melCPi, melD,
                        melE, melF, melK, melK_bulk, melPi, meld, mpelB,
                        mpelD, mpelE, mpelF, mpelPi)
from .inverse import (inverse_glaisher, mijam, mijcd, mijcn, mijcs, mijdc,
                      mijdn, mijds, mijnc, mijnd, mijns, mijsc, mijsd,
                      mijsn)
from .jacobi import GLAISHER_CODES, glaisher, mjam, sncndn
from .jacobi_integrals import (mJomega, mJzeta, mjepsilon, mjlambda,
                               mpJomega, mpJzeta)
from .misc import gcl, gd, gsl, igcl, igd, igsl
from .oracle import OracleSpec, error_report, has_reference, reference
from .registry import (ArityError, FunctionDescriptor, RegistryLookupError,
                       ShapeError, all_descriptors, broadcast_apply, lookup,
                       manifest, manifest_csv)
from .theta import (elnome, ielnome, jtheta, jtheta1, jtheta2, jtheta3,
                    jtheta4, mnome, mnthetaC, mnthetaD, mnthetaN, mnthetaS,
                    nthetaC, nthetaD, nthetaN, nthetaS)

__version__ = "1.0.0"


def _glaisher_functions():
    """Expose mjsn .. mjsd as module-level callables."""
    import sys
    mod = sys.modules[__name__]
    for code in GLAISHER_CODES:
        name = f"mj{code}"

        def fn(x, m, _code=code):
            return glaisher(_code, x, m)

        fn.__name__ = name
        fn.__qualname__ = name
        fn.__doc__ = f"Jacobian elliptic function {code}(x | m)."
        setattr(mod, name, fn)


_glaisher_functions()
del _glaisher_functions

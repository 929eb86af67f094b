"""Structured bipolar argumentation: coherent, adequate and confident semantics."""

from .af import (defends, enumerate, is_admissible, is_complete, is_conflict_free,
                 is_preferred, restrict)
from .bipolar import (BAF, baf_from_sbaf, complex_attacks, enumerate_d, is_d_admissible,
                      is_d_complete, is_d_preferred, mediated_attack, supported_attack)
from .coherence import (check_directionality, enumerate_coherent, is_strongly_coherent,
                        is_weakly_coherent, strong_support_closure, weak_support_closure)
from .errors import (CapExceededError, ConfigError, DomainError, ParseError, PreconditionError,
                     SBAFError, UnknownIdError)
from .fileformat import digest, emit, parse, parse_text
from .language import (FixpointTrace, arg_s, arg_w, characteristic, confident_adequate,
                       confident_coherent, enumerate_adequate, init, is_compatible,
                       is_strongly_adequate, is_weakly_adequate)
from .model import (SBAF, Argument, Language, attacks, is_saturated, is_strongly_saturated,
                    make_sbaf, sent, strongly_saturate, supports, undercut_info)

__version__ = "0.1.0"

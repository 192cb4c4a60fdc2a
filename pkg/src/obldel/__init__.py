"""Oblivious and adversarial deletion codes built from mod-prime hashing, with exact verification."""

from .adversarial import AdversarialCode, VTCode, adversarial_build, vt_decode
from .bitseq import BitString, BudgetExceeded, CodeParams, DeletionPattern, apply_pattern
from .hashtag import HashTag
from .inner_hash import DecodeError, InnerHashSpec
from .oblivious import (ExistentialCode, ExplicitCode, ListWrappedCode, RandomizedCode, SystematicCode,
                        build_list_code, existential_build, explicit_build, list_wrap_build, randomized_build)
from .persist import DescriptorError, load_descriptor, store_descriptor
from .primes import ConstructionError

__version__ = "0.1.0"

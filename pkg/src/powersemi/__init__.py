"""Workbench for power semigroups of finite (and selected infinite)
semigroups: setwise products on bit-mask subsets, cancellativity
classification by brute force and by the singleton rule, isomorphism
lifting and restriction, and exhaustive small-order catalog probes."""

from .cancellation import (BRUTE_FORCE, CASE1, CASE2, CancellationWitness,
                           cancellative_elements_bruteforce,
                           find_witness_bruteforce, is_cancellative_in,
                           singleton_cancellative_elements, verify_witness,
                           witness_noncancellative)
from .catalog import (CatalogEntry, associative_tables, enumerate_semigroups,
                      global_iso_probe, singleton_characterization_check)
from .errors import (AmbientMismatch, IndexOutOfRange, NonAssociative,
                     NonMemberInput, NotCompatible, OrderCapExceeded,
                     OrderUnsupported, PreconditionViolated, TheoremViolation,
                     WorkbenchError)
from .freewords import (cancellativity_campaign, leading_letter_disjoint,
                        letters_cancellation_consistent, word_product)
from .morphisms import (IsoFingerprint, Morphism, all_automorphisms_bruteforce,
                        all_isomorphisms, cancellative_preservation_check,
                        describe_fingerprint_mismatch, element_profiles,
                        find_isomorphism, fingerprint, homomorphisms,
                        isomorphic_bruteforce, lift_isomorphism,
                        restrict_isomorphism, verify_commutativity_transfer)
from .numerical import (NumericalMonoid, equality_campaign, nm_equal,
                        random_member_set, random_monoid, witness_campaign)
from .power import (POWER_CAP, CompletenessCertificate, SubsetElement,
                    SubsetFamily, bits, build_power_semigroup,
                    congruence_family, downward_complete_closure,
                    downward_completeness, family_report, full_family,
                    is_downward_complete, mask_of, mask_product,
                    setwise_product, singleton_family, submasks)
from .semigroups import (MAX_ORDER, Congruence, FiniteSemigroup,
                         all_congruences, congruence_from_partition,
                         format_table, parse_table, read_table,
                         validate_semigroup)

__version__ = "0.1.0"

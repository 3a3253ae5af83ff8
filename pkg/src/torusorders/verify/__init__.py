from .mutants import MUTATIONS, mutate_order
from .samplers import GAMMA0, GAMMA1, rng_for
from .suites import (SUITES, SuiteReport, check_lemma_witnesses, parse_selector,
                     run_suite)

__all__ = ["MUTATIONS", "mutate_order", "GAMMA0", "GAMMA1", "rng_for", "SUITES",
           "SuiteReport", "check_lemma_witnesses", "parse_selector", "run_suite"]

"""Shared fixtures.

Expensive artifacts (field tables, full code builds, repair plans) are built
once per session and shared across test modules.  Every value asserted about
them lives in the individual test modules, next to the independent
cross-checks that justify it.
"""

from __future__ import annotations

import numpy as np
import pytest

from wedgelift import (
    BinaryTraceCode,
    CosetFamily,
    FieldSpec,
    WedgeLiftedCode,
    build_code,
    build_repair_plan,
    make_coset_family,
    make_field,
    trace_code,
)
from wedgelift.repair import RepairPlan


@pytest.fixture(scope="session")
def f4() -> FieldSpec:
    return make_field(2)


@pytest.fixture(scope="session")
def f8() -> FieldSpec:
    return make_field(3)


@pytest.fixture(scope="session")
def f16() -> FieldSpec:
    return make_field(4)


@pytest.fixture(scope="session")
def f64() -> FieldSpec:
    return make_field(6)


@pytest.fixture(scope="session")
def fam4_3(f4: FieldSpec) -> CosetFamily:
    return make_coset_family(f4, 3)


@pytest.fixture(scope="session")
def fam16_5(f16: FieldSpec) -> CosetFamily:
    return make_coset_family(f16, 5)


@pytest.fixture(scope="session")
def fam16_15(f16: FieldSpec) -> CosetFamily:
    return make_coset_family(f16, 15)


@pytest.fixture(scope="session")
def fam64_9(f64: FieldSpec) -> CosetFamily:
    return make_coset_family(f64, 9)


@pytest.fixture(scope="session")
def code4_3(fam4_3: CosetFamily) -> WedgeLiftedCode:
    return build_code(fam4_3)


@pytest.fixture(scope="session")
def code16_5(fam16_5: CosetFamily) -> WedgeLiftedCode:
    return build_code(fam16_5)


@pytest.fixture(scope="session")
def code16_15(fam16_15: CosetFamily) -> WedgeLiftedCode:
    return build_code(fam16_15)


@pytest.fixture(scope="session")
def code64_9(fam64_9: CosetFamily) -> WedgeLiftedCode:
    return build_code(fam64_9)


@pytest.fixture(scope="session")
def trace16_5(code16_5: WedgeLiftedCode) -> BinaryTraceCode:
    return trace_code(code16_5)


@pytest.fixture(scope="session")
def trace64_9(code64_9: WedgeLiftedCode) -> BinaryTraceCode:
    return trace_code(code64_9)


@pytest.fixture(scope="session")
def plan16_5(code16_5: WedgeLiftedCode) -> RepairPlan:
    return build_repair_plan(code16_5)


@pytest.fixture(scope="session")
def plan64_9(code64_9: WedgeLiftedCode) -> RepairPlan:
    return build_repair_plan(code64_9)


@pytest.fixture()
def rng() -> np.random.Generator:
    return np.random.default_rng(20260815)

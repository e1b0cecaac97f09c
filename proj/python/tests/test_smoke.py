# Copyright 2026 The psyq Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import json
import os
import pathlib

import pytest

import psyq

DATA = pathlib.Path(os.environ.get("PSYQ_DATA_DIR", pathlib.Path(__file__).resolve().parents[2] / "data"))


def load(name):
    return (DATA / name).read_text()


@pytest.fixture(scope="module")
def alex5():
    return psyq.Psyquandle.from_matrix(load("alex5.psy"))


@pytest.fixture(scope="module")
def w42():
    return psyq.WeightPair.from_text(load("w42.wgt"))


def test_alexander_matches_file(alex5):
    x = psyq.Psyquandle.alexander(5, 3, 2, 4, 1)
    assert x.fingerprint() == alex5.fingerprint()
    assert x.order == 5
    assert x.pI_adequate


def test_k2_polynomial(alex5, w42):
    k2 = psyq.Diagram.catalog("K2")
    assert psyq.counting_invariant(k2, alex5) == 5
    p = psyq.enhanced_polynomial(k2, alex5, w42, two_variable=True)
    assert p["rendered"] == "5v^2"
    assert p["terms"] == {(0, 2): 5}


def test_pseudoknot_requires_adequacy(alex5, w42):
    with pytest.raises(psyq.AdequacyError):
        psyq.enhanced_polynomial(psyq.Diagram.catalog("K1"), alex5, w42, pseudoknot=True)


def test_block_matrix_report():
    report = psyq.check_axioms(load("block3.psy"))
    assert not report["valid"]
    assert report["violations"][0].startswith("axiom iv.1")


def test_json_round_trip(alex5, w42):
    text = psyq.invariant_json("K2", psyq.Diagram.catalog("K2"), alex5, w42, two_variable=True)
    obj = json.loads(text)
    assert obj["counting_invariant"] == 5
    assert list(obj) == ["diagram", "psyquandle_hash", "modulus", "mode", "counting_invariant", "terms", "rendered"]


def test_weight_space_and_catalog(alex5):
    assert psyq.weight_space_count(alex5, 4, strong=True) == "16"
    assert "K1" in psyq.catalog_names()
    assert psyq.Diagram.braid_closure(2, "t1 t1").components == 2
    with pytest.raises(psyq.UnknownDiagramError):
        psyq.Diagram.catalog("nope")
    with pytest.raises(psyq.ParseError):
        psyq.WeightPair.from_text("0 0\n")


def test_suite_table():
    table = psyq.suite_table(str(DATA / "suite"))
    assert "Φ_X^Z | Φ_X^{φ,ψ}(L) | L" in table

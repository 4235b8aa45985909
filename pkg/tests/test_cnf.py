from itertools import combinations, product
from math import comb

import pytest

from conftest import dpll
from ramsat import cnf, oracle
from ramsat.cnf import (
    CnfFormula,
    EncodingError,
    VarMap,
    at_least_k,
    at_most_k,
    decode_model,
    dimacs_lines,
    encode_ds,
    lex_leq,
)


class _Alloc:
    def __init__(self, start):
        self.next = start

    def __call__(self):
        v = self.next
        self.next += 1
        return v


def count_models(clauses, num_fixed, predicate):
    """Assignments to vars 1..num_fixed extendable to a model."""
    hits = 0
    for bits in product([False, True], repeat=num_fixed):
        assign = {v + 1: bits[v] for v in range(num_fixed)}
        if dpll(clauses, assign):
            assert predicate(bits)
            hits += 1
        else:
            assert not predicate(bits)
    return hits


class TestCardinality:
    @pytest.mark.parametrize("m", range(1, 7))
    def test_at_least_k_exhaustive(self, m):
        for k in range(0, m + 2):
            alloc = _Alloc(m + 1)
            clauses = at_least_k(list(range(1, m + 1)), k, alloc)
            count_models(clauses, m, lambda bits, k=k: sum(bits) >= k)

    @pytest.mark.parametrize("m", range(1, 7))
    def test_at_most_k_exhaustive(self, m):
        for k in range(0, m + 1):
            alloc = _Alloc(m + 1)
            clauses = at_most_k(list(range(1, m + 1)), k, alloc)
            count_models(clauses, m, lambda bits, k=k: sum(bits) <= k)

    def test_infeasible_threshold_is_empty_clause(self):
        assert at_least_k([1, 2], 3, _Alloc(3)) == [[]]

    def test_negative_threshold(self):
        with pytest.raises(EncodingError):
            at_least_k([1], -1, _Alloc(2))


class TestLex:
    @pytest.mark.parametrize("length", [1, 2, 3, 4])
    def test_exhaustive(self, length):
        a = list(range(1, length + 1))
        b = list(range(length + 1, 2 * length + 1))
        alloc = _Alloc(2 * length + 1)
        clauses = lex_leq(a, b, alloc)
        for bits in product([False, True], repeat=2 * length):
            assign = {v + 1: bits[v] for v in range(2 * length)}
            expected = tuple(bits[:length]) <= tuple(bits[length:])
            assert dpll(clauses, assign) == expected

    def test_clause_counts(self):
        assert len(lex_leq([1], [2], _Alloc(3))) == 1
        clauses = lex_leq([1, 2], [3, 4], _Alloc(5))
        assert len(clauses) == 6

    def test_length_mismatch(self):
        with pytest.raises(EncodingError):
            lex_leq([1], [2, 3], _Alloc(4))


class TestEncoding:
    def test_goodness_clause_count(self):
        f, _ = encode_ds(13, 3, 5)
        assert f.group_clause_count("goodness") == comb(13, 3) + comb(13, 5) == 1573

    def test_edge_vars_lex_order(self):
        _, vm = encode_ds(5, 3, 3)
        assert list(vm.edge_vars) == list(combinations(range(5), 2))
        assert list(vm.edge_vars.values()) == list(range(1, 11))

    def test_witness_counts(self):
        _, vm = encode_ds(6, 3, 3)
        assert len(vm.max_witness) == len(vm.min_witness) == 15 * 4

    def test_group_order_and_validation(self):
        f, _ = encode_ds(6, 3, 4)
        tags = [tag for tag, _, _ in f.groups]
        assert tags == [
            "goodness",
            "degeneracy",
            "maximality",
            "cardinality",
            "minimality",
            "cardinality",
            "lex",
        ]
        f.validate()

    def test_saturation_layer_growth_is_polynomial(self):
        def layer(n):
            f, _ = encode_ds(n, 3, 3)
            return f.group_clause_count("maximality") + f.group_clause_count(
                "minimality"
            )

        # Quartic growth: doubling n multiplies the layer by at most ~16.
        assert layer(20) / layer(10) <= 20

    def test_budget_enforced(self):
        with pytest.raises(EncodingError):
            encode_ds(200, 7, 7)

    def test_parameter_checks(self):
        with pytest.raises(EncodingError):
            encode_ds(5, 2, 3)
        with pytest.raises(EncodingError):
            encode_ds(4, 3, 5)

    def test_deterministic_output(self):
        a, vma = encode_ds(8, 3, 4)
        b, vmb = encode_ds(8, 3, 4)
        assert dimacs_lines(a, vma) == dimacs_lines(b, vmb)

    def test_header_consistent(self):
        f, vm = encode_ds(6, 3, 3)
        lines = dimacs_lines(f, vm)
        header = next(l for l in lines if l.startswith("p cnf"))
        _, _, nv, nc = header.split()
        assert int(nv) == f.num_vars == vm.num_vars
        assert int(nc) == len(f.clauses) == sum(1 for l in lines if l.endswith(" 0"))

    def test_symmetry_break_optional(self):
        with_lex, _ = encode_ds(6, 3, 3, symmetry_break=True)
        without, _ = encode_ds(6, 3, 3, symmetry_break=False)
        assert with_lex.group_clause_count("lex") > 0
        assert without.group_clause_count("lex") == 0
        assert "lex" not in [tag for tag, _, _ in without.groups]

    def test_varmap_roundtrip(self):
        _, vm = encode_ds(6, 3, 4)
        assert VarMap.from_json(vm.to_json()) == vm


class TestSemantics:
    def test_models_at_5_3_3_are_exactly_the_ds_masks(self):
        # Without symmetry breaking the projections of the models onto the
        # edge variables must be exactly the oracle's labeled answers.
        f, vm = encode_ds(5, 3, 3, symmetry_break=False)
        expected = set(oracle.ds_masks_literal(5, 3, 3))
        pair_count = 10
        for mask in range(1 << pair_count):
            assign = {b + 1: bool(mask >> b & 1) for b in range(pair_count)}
            assert dpll(f.clauses, assign) == (mask in expected)

    def test_symmetry_break_keeps_at_least_one_model_per_class(self):
        f, vm = encode_ds(5, 3, 3, symmetry_break=True)
        expected = set(oracle.ds_masks_literal(5, 3, 3))
        survivors = [
            mask
            for mask in sorted(expected)
            if dpll(
                f.clauses,
                {b + 1: bool(mask >> b & 1) for b in range(10)},
            )
        ]
        assert 1 <= len(survivors) < len(expected)

    def test_unsat_below_known_minimum(self):
        f, _ = encode_ds(4, 3, 3, symmetry_break=False)
        assert not dpll(f.clauses)

    def test_decode_model(self):
        f, vm = encode_ds(5, 3, 3, symmetry_break=False)
        mask = oracle.ds_masks_literal(5, 3, 3)[0]
        g = decode_model(
            vm, {b + 1: bool(mask >> b & 1) for b in range(10)}
        )
        assert oracle.graph_to_mask(g) == mask

    def test_decode_missing_edge_var(self):
        _, vm = encode_ds(5, 3, 3)
        with pytest.raises(EncodingError):
            decode_model(vm, {1: True})


class TestFormulaValidation:
    def test_empty_clause_rejected(self):
        f = CnfFormula(num_vars=2, clauses=[[1], []])
        with pytest.raises(EncodingError):
            f.validate()

    def test_tautology_rejected(self):
        f = CnfFormula(num_vars=2, clauses=[[1, -1]])
        with pytest.raises(EncodingError):
            f.validate()

    def test_out_of_range_literal(self):
        f = CnfFormula(num_vars=2, clauses=[[3]])
        with pytest.raises(EncodingError):
            f.validate()

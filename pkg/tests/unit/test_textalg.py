#!/usr/bin/env python3

"""
Unit tests for the plain-string algorithms in slpgram.core.textalg.
"""

import random
import sys
import unittest
from collections import defaultdict
from pathlib import Path

# Add the parent directory to sys.path
sys.path.insert(0, str(Path(__file__).parent.parent.parent))
sys.path.insert(0, str(Path(__file__).parent.parent))

from grammars import COVER_EXAMPLE

from slpgram.core.textalg import (
    Cover,
    chain_bounds,
    greedy_left,
    greedy_right,
    kmp_occurrences,
    lcp_array,
    lnocc_greedy,
    loc_plain,
    nocc,
    nocc_decomposed,
    rnocc_greedy,
    suffix_array,
    weighted_qgram_freqs,
)


def naive_occurrences(text, pattern):
    m = len(pattern)
    return [p + 1 for p in range(len(text) - m + 1) if tuple(text[p : p + m]) == tuple(pattern)]


def random_text(rng, alphabet=b"ab", low=1, high=30):
    return tuple(rng.choice(alphabet) for _ in range(rng.randint(low, high)))


class TestKmp(unittest.TestCase):
    """Test exact pattern search."""

    def test_fig1_occurrences(self):
        self.assertEqual(kmp_occurrences(b"aababaababaab", b"ab"), [2, 4, 7, 9, 12])

    def test_overlapping(self):
        self.assertEqual(kmp_occurrences(b"aaaa", b"aa"), [1, 2, 3])

    def test_absent_and_longer(self):
        self.assertEqual(kmp_occurrences(b"abc", b"d"), [])
        self.assertEqual(kmp_occurrences(b"ab", b"abc"), [])

    def test_empty_pattern(self):
        with self.assertRaises(ValueError):
            kmp_occurrences(b"abc", b"")

    def test_random_against_naive(self):
        rng = random.Random(1)
        for _ in range(300):
            text = random_text(rng)
            pattern = random_text(rng, high=4)
            self.assertEqual(kmp_occurrences(text, pattern), naive_occurrences(text, pattern))


class TestCovers(unittest.TestCase):
    """Test longest overlapping covers on plain strings."""

    def test_cover_example(self):
        for j in (2, 5, 9, 12):
            self.assertEqual(loc_plain(COVER_EXAMPLE, 5, j), Cover(2, 16))
        self.assertEqual(loc_plain(COVER_EXAMPLE, 5, 17), Cover(17, 21))

    def test_unique_gram(self):
        self.assertEqual(loc_plain(b"abcde", 3, 2), Cover(2, 4))

    def test_unary(self):
        self.assertEqual(loc_plain(b"aaaa", 2, 2), Cover(1, 4))

    def test_out_of_range(self):
        with self.assertRaises(ValueError):
            loc_plain(b"abc", 2, 3)
        with self.assertRaises(ValueError):
            loc_plain(b"abc", 2, 0)

    def test_chain_bounds(self):
        self.assertEqual(chain_bounds([2, 5, 9, 12, 17], 2, 5), (0, 3))
        self.assertEqual(chain_bounds([2, 5, 9, 12, 17], 4, 5), (4, 4))

    def test_cover_type(self):
        self.assertEqual(Cover(2, 16).length, 15)
        self.assertEqual(Cover(2, 16).shifted(3), Cover(5, 19))
        with self.assertRaises(ValueError):
            Cover(4, 3)


class TestGreedy(unittest.TestCase):
    """Test the left and right greedy non-overlapping selections."""

    def test_lnocc_and_rnocc(self):
        self.assertEqual(lnocc_greedy(b"aaa", b"aa"), [1])
        self.assertEqual(rnocc_greedy(b"aaa", b"aa"), [2])
        self.assertEqual(lnocc_greedy(b"aaaaaaaa", b"aa"), [1, 3, 5, 7])

    def test_greedy_left_after(self):
        self.assertEqual(greedy_left([1, 2, 3], 2, after=1), [2])
        self.assertEqual(greedy_right([1, 2, 3], 2), [1, 3])

    def test_nocc_cover_example(self):
        self.assertEqual(nocc(COVER_EXAMPLE, b"aabaa"), 3)

    def test_counts_agree(self):
        rng = random.Random(2)
        for _ in range(300):
            text = random_text(rng)
            pattern = random_text(rng, high=3)
            self.assertEqual(len(lnocc_greedy(text, pattern)), len(rnocc_greedy(text, pattern)))

    def test_decomposition_matches_direct_count(self):
        rng = random.Random(3)
        checked = 0
        for _ in range(600):
            text = random_text(rng, high=24)
            pattern = random_text(rng, high=3)
            i = rng.randint(1, len(text))
            value = nocc_decomposed(text, pattern, i)
            if value is not None:
                checked += 1
                self.assertEqual(value, nocc(text, pattern), (text, pattern, i))
        self.assertGreater(checked, 100)

    def test_decomposition_absent_part(self):
        self.assertIsNone(nocc_decomposed(b"abab", b"ab", 1))
        with self.assertRaises(ValueError):
            nocc_decomposed(b"abab", b"ab", 5)


class TestSuffixArray(unittest.TestCase):
    """Test suffix and LCP arrays."""

    def test_banana(self):
        sa = suffix_array(b"banana")
        self.assertEqual(sa, [6, 4, 2, 1, 5, 3])
        self.assertEqual(lcp_array(b"banana", sa), [0, 1, 3, 0, 0, 2])

    def test_single_symbol(self):
        self.assertEqual(suffix_array(b"x"), [1])
        self.assertEqual(suffix_array(b"aaa"), [3, 2, 1])

    def test_empty(self):
        with self.assertRaises(ValueError):
            suffix_array(b"")

    def test_random_against_sorted(self):
        rng = random.Random(4)
        for _ in range(100):
            text = random_text(rng, alphabet=b"abc", high=60)
            sa = suffix_array(text)
            self.assertEqual(sa, sorted(range(1, len(text) + 1), key=lambda p: text[p - 1 :]))
            lcp = lcp_array(text, sa)
            for r in range(1, len(sa)):
                a, b = text[sa[r - 1] - 1 :], text[sa[r] - 1 :]
                h = 0
                while h < min(len(a), len(b)) and a[h] == b[h]:
                    h += 1
                self.assertEqual(lcp[r], h)

    def test_sentinel_symbols(self):
        text = (0x10000, 97, 98, 0x10001)
        self.assertEqual(suffix_array(text), [2, 3, 1, 4])


class TestWeightedFrequencies(unittest.TestCase):
    """Test weighted q-gram aggregation."""

    def test_abab(self):
        self.assertEqual(weighted_qgram_freqs(b"abab", 2, [5, 7, 1, 0]), {tuple(b"ab"): 6, tuple(b"ba"): 7})

    def test_short_text(self):
        self.assertEqual(weighted_qgram_freqs(b"ab", 3, [1, 1]), {})

    def test_zero_weight_kept(self):
        self.assertEqual(weighted_qgram_freqs(b"ab", 1, [0, 2]), {(97,): 0, (98,): 2})

    def test_bad_arguments(self):
        with self.assertRaises(ValueError):
            weighted_qgram_freqs(b"ab", 0, [1, 1])
        with self.assertRaises(ValueError):
            weighted_qgram_freqs(b"ab", 1, [1])

    def test_random_against_dict(self):
        rng = random.Random(5)
        for _ in range(100):
            text = random_text(rng, alphabet=b"abc", high=50)
            q = rng.randint(1, 5)
            w = [rng.randint(0, 9) for _ in text]
            expected = defaultdict(int)
            for p in range(len(text) - q + 1):
                expected[text[p : p + q]] += w[p]
            self.assertEqual(weighted_qgram_freqs(text, q, w), dict(expected))


if __name__ == "__main__":
    unittest.main()

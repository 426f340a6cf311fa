# -*- coding: utf-8 -*-
import unittest

import pytest
from hypothesis import given, settings, strategies as st

from .context import cliquevectors
from .tools import EXAMPLE_B, EXAMPLE_C
from cliquevectors.transform import (BVector, CliqueVector, Verdict, b_to_c, binomial, c_to_b,
                                     validate)


class TestVectors(unittest.TestCase):

  def test_construction(self):
    c = CliqueVector([3, 3, 1])
    self.assertEqual(c, (3, 3, 1))
    self.assertEqual(c.n, 3)
    self.assertEqual(c.d, 3)
    self.assertEqual(c.format(), '3,3,1')
    self.assertEqual(repr(c), 'CliqueVector(3,3,1)')
    self.assertTrue(c.is_positive())
    self.assertFalse(BVector([0, 4]).is_positive())

  def test_invalid(self):
    with self.assertRaises(ValueError):
      CliqueVector([])
    with self.assertRaises(ValueError):
      CliqueVector([1, True])
    with self.assertRaises(ValueError):
      BVector([1, 2.5])

  def test_parse(self):
    self.assertEqual(CliqueVector.parse('10,14,11,3'), EXAMPLE_C)
    self.assertEqual(BVector.parse(' 1, -2 '), (1, -2))
    for text in ('', '1,,2', 'a', '1,2,'):
      with self.assertRaises(ValueError):
        CliqueVector.parse(text)

  def test_binomial(self):
    self.assertEqual(binomial(5, 2), 10)
    self.assertEqual(binomial(3, 5), 0)
    self.assertEqual(binomial(0, 0), 1)
    with self.assertRaises(ValueError):
      binomial(-1, 0)


class TestTransform(unittest.TestCase):

  def test_example(self):
    self.assertEqual(c_to_b(EXAMPLE_C), EXAMPLE_B)
    self.assertEqual(b_to_c(EXAMPLE_B), EXAMPLE_C)
    self.assertIsInstance(c_to_b(EXAMPLE_C), BVector)
    self.assertIsInstance(b_to_c(EXAMPLE_B), CliqueVector)

  def test_small_cases(self):
    self.assertEqual(c_to_b([4, 4]), (0, 4))
    self.assertEqual(c_to_b([5]), (5,))
    self.assertEqual(c_to_b([3, 3, 1]), (1, 1, 1))
    # The complete graph K_4 has b-vector all ones.
    self.assertEqual(c_to_b([4, 6, 4, 1]), (1, 1, 1, 1))

  def test_large_values_are_exact(self):
    c = [10 ** 40, 3 * 10 ** 39, 10 ** 38]
    self.assertEqual(b_to_c(c_to_b(c)), tuple(c))


@given(st.lists(st.integers(-10 ** 6, 10 ** 6), min_size=1, max_size=10))
def test_transforms_are_inverse(c):
  assert b_to_c(c_to_b(c)) == tuple(c)
  assert c_to_b(b_to_c(c)) == tuple(c)
  assert sum(c_to_b(c)) == c[0]


@pytest.mark.slow
@settings(max_examples=10 ** 4, deadline=None)
@given(st.lists(st.integers(-10 ** 9, 10 ** 9), min_size=1, max_size=12))
def test_transforms_are_inverse_many_vectors(c):
  b = c_to_b(c)
  assert b_to_c(b) == tuple(c)
  assert c_to_b(b_to_c(c)) == tuple(c)
  # Evaluating at t = 1 sums the b-vector to the vertex count.
  assert sum(b) == c[0]


class TestValidate(unittest.TestCase):

  def test_valid(self):
    verdict = validate(EXAMPLE_C, 0)
    self.assertTrue(verdict)
    self.assertEqual(verdict, Verdict(True, None, EXAMPLE_B))
    self.assertEqual(str(verdict), 'valid (b = 4,1,2,3)')

  def test_rejections(self):
    self.assertEqual(validate([4, 4], 0).reason, 'b_1 = 0 not positive')
    self.assertEqual(str(validate([4, 4], 0)), 'invalid: b_1 = 0 not positive')
    self.assertEqual(validate(EXAMPLE_C, 1).reason, 'b_1 = 4 ≠ 1')
    self.assertEqual(validate([3, 3, 1], 4).reason, 'k = 4 exceeds d = 3')
    self.assertFalse(validate([4, 4], 0))

  def test_complete_graph(self):
    for k in range(4):
      self.assertTrue(validate([3, 3, 1], k))
    self.assertFalse(validate([3, 3, 1], 4))

  def test_negative_k(self):
    with self.assertRaises(ValueError):
      validate([1], -1)

  def test_first_violation_reported(self):
    # b = (1, 2, -1): b_2 fails the k=2 condition before b_3 fails positivity.
    c = b_to_c([1, 2, -1])
    self.assertEqual(validate(c, 2).reason, 'b_2 = 2 ≠ 1')
    self.assertEqual(validate(c, 1).reason, 'b_3 = -1 not positive')


@pytest.mark.parametrize("b", [(1,), (2, 1), (1, 1, 3), EXAMPLE_B])
def test_validate_threshold_vectors(b):
  c = b_to_c(b)
  leading = next((i for i, x in enumerate(b) if x != 1), len(b))
  for k in range(len(b) + 2):
    assert bool(validate(c, k)) == (k <= leading)

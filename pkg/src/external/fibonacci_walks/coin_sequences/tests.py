import math

import numpy as np

from django.test import SimpleTestCase

from src.external.fibonacci_walks.coin_sequences.methods import (
    closed_form_coin,
    detect_period,
    fib_coin_sequence,
    fib_step_coin_word,
    fibonacci_clock,
    period_product,
    step_operator_letters,
)
from src.external.fibonacci_walks.coin_sequences.models import CoinWord
from src.external.fibonacci_walks.core_types.methods import make_hadamard_coin
from src.external.fibonacci_walks.core_types.models import AnglePair, CoinMatrix

def random_angle_pairs(count: int, seed: int) -> list[AnglePair]:
    rng = np.random.default_rng(seed)
    return [AnglePair(alpha, beta) for alpha, beta in rng.uniform(0.0, 2 * math.pi, (count, 2))]

def max_entry_difference(a: CoinMatrix, b: CoinMatrix) -> float:
    return float(np.max(np.abs(a.entries - b.entries)))

class FibCoinSequenceTests(SimpleTestCase):
    def test_period_six_of_raw_recursion(self):
        for angles in random_angle_pairs(200, seed=1):
            coins = [make_hadamard_coin(angles.alpha)]
            coins.append(coins[0] @ make_hadamard_coin(angles.beta))
            while len(coins) < 18:
                coins.append(coins[-1] @ coins[-2])
            for j in range(12):
                self.assertLess(max_entry_difference(coins[j + 6], coins[j]), 1e-12)

    def test_matches_closed_forms(self):
        for angles in random_angle_pairs(200, seed=2):
            word = fib_coin_sequence(angles, 6)
            for j in range(6):
                self.assertLess(max_entry_difference(word.coins[j], closed_form_coin(angles, j)), 1e-12)

    def test_long_word_is_periodic(self):
        angles = AnglePair(1.0, 0.3)
        word = fib_coin_sequence(angles, 4800)
        self.assertEqual(word.period, 6)
        self.assertEqual(len(word), 4800)
        self.assertEqual(word.letters[:8], ('C0', 'C1', 'C2', 'C3', 'C4', 'C5', 'C0', 'C1'))
        self.assertLess(max_entry_difference(word.coin_at(4799), closed_form_coin(angles, 5)), 1e-12)
        self.assertTrue(all(coin.is_unitary() for coin in word.coins[:12]))

    def test_equal_angles(self):
        word = fib_coin_sequence(AnglePair(0.9, 0.9), 12)
        self.assertTrue(word.coins[1].allclose(CoinMatrix.identity()))
        self.assertEqual(word.period, 3)

    def test_known_coins(self):
        angles = AnglePair(math.pi / 3, math.pi / 6)
        word = fib_coin_sequence(angles, 6)
        self.assertTrue(word.coins[5].allclose(make_hadamard_coin(angles.beta)))
        self.assertTrue(word.coins[2].allclose(make_hadamard_coin(2 * angles.alpha - angles.beta)))

    def test_short_word_has_no_period(self):
        word = fib_coin_sequence(AnglePair(0.4, 0.1), 4)
        self.assertIsNone(word.period)
        self.assertEqual(word.prefix(12), ['C0', 'C1', 'C2', 'C3'])

    def test_count_must_be_positive(self):
        with self.assertRaises(ValueError):
            fib_coin_sequence(AnglePair(0.4, 0.1), 0)

class ClosedFormCoinTests(SimpleTestCase):
    def test_first_is_alpha_coin(self):
        angles = AnglePair(0.8, 2.2)
        self.assertTrue(closed_form_coin(angles, 0).allclose(make_hadamard_coin(0.8)))

    def test_fourth_is_rotation(self):
        coin = closed_form_coin(AnglePair(math.pi / 3, math.pi / 6), 4)
        c, s = math.cos(math.pi / 6), math.sin(math.pi / 6)
        np.testing.assert_allclose(coin.entries, [[c, s], [-s, c]], atol=1e-15)
        self.assertAlmostEqual(coin.det.real, 1.0, places=12)

    def test_out_of_range(self):
        for j in (-1, 6):
            with self.assertRaises(ValueError):
                closed_form_coin(AnglePair(0.1, 0.2), j)

    def test_full_period_product(self):
        for angles in random_angle_pairs(50, seed=4):
            product = period_product(fib_coin_sequence(angles, 6), 6)
            self.assertTrue(product.is_unitary())
            self.assertAlmostEqual(abs(product.det), 1.0, places=12)
            self.assertTrue(product.allclose(CoinMatrix.identity()))

class FibStepCoinWordTests(SimpleTestCase):
    def test_six_letters(self):
        word = fib_step_coin_word(AnglePair(0.5, 1.5), 6)
        self.assertEqual(word.letters, ('α', 'β', 'α', 'α', 'β', 'α'))
        self.assertEqual(word.period, 3)

    def test_matches_step_operator_expansion(self):
        applied = step_operator_letters(0) + step_operator_letters(1) + step_operator_letters(2)
        self.assertEqual(fib_step_coin_word(AnglePair(0.5, 1.5), 6).letters, applied)

    def test_three_block_squared_is_six_block(self):
        three = fib_step_coin_word(AnglePair(0.5, 1.5), 3)
        six = fib_step_coin_word(AnglePair(0.5, 1.5), 6)
        self.assertEqual(three.letters * 2, six.letters)

    def test_equal_angles_constant_word(self):
        word = fib_step_coin_word(AnglePair(0.7, 0.7), 9)
        coin = make_hadamard_coin(0.7)
        self.assertTrue(all(item.allclose(coin) for item in word.coins))

    def test_products(self):
        for angles in random_angle_pairs(20, seed=5):
            word = fib_step_coin_word(angles, 6)
            self.assertTrue(period_product(word, 6).allclose(CoinMatrix.identity()))

        three = period_product(fib_step_coin_word(AnglePair(0.5, 1.5), 3), 3)
        self.assertFalse(three.allclose(CoinMatrix.identity(), 1e-3))

    def test_translations_must_be_positive(self):
        with self.assertRaises(ValueError):
            fib_step_coin_word(AnglePair(0.5, 1.5), 0)

class StepOperatorLettersTests(SimpleTestCase):
    def test_initial_operators(self):
        self.assertEqual(step_operator_letters(0), ('α',))
        self.assertEqual(step_operator_letters(1), ('β', 'α'))
        self.assertEqual(step_operator_letters(2), ('α', 'β', 'α'))

    def test_length_follows_clock(self):
        clock = fibonacci_clock(10)
        for j in range(11):
            self.assertEqual(len(step_operator_letters(j)), clock.F[j])

class FibonacciClockTests(SimpleTestCase):
    def test_examples(self):
        self.assertEqual(fibonacci_clock(0).r, 0)
        self.assertEqual(fibonacci_clock(1).r, 1)
        self.assertEqual(fibonacci_clock(2).r, 3)
        self.assertEqual(fibonacci_clock(3).r, 6)
        self.assertEqual(fibonacci_clock(5).r, 19)

    def test_increments(self):
        for j in range(1, 30):
            self.assertEqual(fibonacci_clock(j).r - fibonacci_clock(j - 1).r, fibonacci_clock(j).F[j - 1])

    def test_time(self):
        self.assertAlmostEqual(fibonacci_clock(5).time(0.5), 9.5)

    def test_negative_index(self):
        with self.assertRaises(ValueError):
            fibonacci_clock(-1)

class CoinWordTests(SimpleTestCase):
    def test_detect_period(self):
        a, b = make_hadamard_coin(0.1), make_hadamard_coin(0.2)
        self.assertEqual(detect_period([a, b, a, b, a]), 2)
        self.assertIsNone(detect_period([a, b, b]))

    def test_periodic_access(self):
        a, b = make_hadamard_coin(0.1), make_hadamard_coin(0.2)
        word = CoinWord((a, b), ('a', 'b'), period=2)
        self.assertIs(word.coin_at(7), b)
        self.assertEqual(word.prefix(5), ['a', 'b', 'a', 'b', 'a'])

    def test_invalid_words(self):
        a = make_hadamard_coin(0.1)
        with self.assertRaises(ValueError):
            CoinWord((a,), ('a', 'b'))
        with self.assertRaises(ValueError):
            CoinWord((), ())
        with self.assertRaises(ValueError):
            CoinWord((a,), ('a',), period=2)

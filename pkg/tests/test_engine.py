import math

import pytest

from pidginsent import (
    EngineConfig,
    Lexicon,
    LexiconEntry,
    but_clause_reweight,
    match_ngrams,
    normalize_compound,
    polarity_scores,
    punctuation_amplifier,
    token_valence,
    tokenize,
)

CFG = EngineConfig()


class TestConfig:
    def test_defaults(self):
        assert CFG.alpha == 15.0
        assert CFG.negation_scalar == -0.74

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"alpha": 0.0},
            {"alpha": -1.0},
            {"negation_scalar": 0.5},
            {"max_ngram": 0},
            {"max_ngram": 4},
            {"booster_distance_decay": (1.0, 0.9)},
        ],
    )
    def test_rejects_bad_values(self, kwargs):
        with pytest.raises(ValueError):
            EngineConfig(**kwargs)


class TestTokenize:
    def test_empty(self):
        assert tokenize("", CFG).tokens == ()

    def test_strips_outer_punctuation(self):
        assert tokenize("som teams get black,", CFG).tokens == ("som", "teams", "get", "black")

    def test_keeps_internal_punctuation(self):
        assert tokenize("nw?ole don't", CFG).tokens == ("nw?ole", "don't")

    def test_pure_punctuation_token_survives(self):
        assert tokenize("well :) ok", CFG).tokens == ("well", ":)", "ok")

    def test_lexicon_form_preserved(self, english_lexicon):
        doc = tokenize("happy :-( day", CFG, english_lexicon)
        assert doc.tokens == ("happy", ":-(", "day")

    def test_elongation_collapse(self):
        cfg = EngineConfig(normalize_elongation=True)
        assert tokenize("gooooooal", cfg).tokens == ("goooal",)

    def test_elongation_off_by_default(self):
        assert tokenize("gooooooal", CFG).tokens == ("gooooooal",)

    def test_cap_differential(self):
        assert tokenize("this is GREAT", CFG).is_cap_differential
        assert not tokenize("THIS IS GREAT", CFG).is_cap_differential
        assert not tokenize("this is great", CFG).is_cap_differential
        # non-alphabetic tokens don't count toward the differential
        assert not tokenize("GREAT 0-2 !!", CFG).is_cap_differential


class TestTokenValence:
    def lex(self, **tokens):
        return Lexicon([LexiconEntry(t, v) for t, v in tokens.items()])

    def test_plain_hit(self):
        lex = self.lex(good=1.9)
        doc = tokenize("good", CFG, lex)
        assert token_valence(doc, 0, lex, CFG) == 1.9

    def test_miss_is_zero(self):
        lex = self.lex(good=1.9)
        doc = tokenize("meh", CFG, lex)
        assert token_valence(doc, 0, lex, CFG) == 0.0

    def test_negation(self):
        lex = self.lex(good=1.9)
        doc = tokenize("not good", CFG, lex)
        assert token_valence(doc, 1, lex, CFG) == pytest.approx(1.9 * -0.74)

    def test_negation_two_back(self):
        lex = self.lex(good=1.9)
        doc = tokenize("not that good", CFG, lex)
        assert token_valence(doc, 2, lex, CFG) == pytest.approx(1.9 * -0.74)

    def test_all_caps_only_text_gets_no_emphasis(self):
        lex = self.lex(good=1.9)
        doc = tokenize("GOOD", CFG, lex)
        assert not doc.is_cap_differential
        assert token_valence(doc, 0, lex, CFG) == 1.9

    def test_caps_emphasis_in_mixed_text(self):
        lex = self.lex(good=1.9)
        doc = tokenize("this is GOOD", CFG, lex)
        assert token_valence(doc, 2, lex, CFG) == pytest.approx(1.9 + 0.733)

    def test_booster(self):
        lex = self.lex(good=1.9)
        doc = tokenize("very good", CFG, lex)
        assert token_valence(doc, 1, lex, CFG) == pytest.approx(1.9 + 0.293)

    def test_booster_distance_decay(self):
        lex = self.lex(good=1.9)
        doc = tokenize("very damn filler good", CFG, lex)
        assert token_valence(doc, 3, lex, CFG) == pytest.approx(1.9 + 0.293 * 0.9)

    def test_dampener_aligns_with_negative(self):
        lex = self.lex(bad=-2.5)
        doc = tokenize("slightly bad", CFG, lex)
        assert token_valence(doc, 1, lex, CFG) == pytest.approx(-2.5 + 0.293)

    def test_booster_word_itself_scores_zero(self):
        lex = self.lex(very=2.0, good=1.9)
        doc = tokenize("very good", CFG, lex)
        assert token_valence(doc, 0, lex, CFG) == 0.0

    def test_never_so_amplifies(self):
        # "so" boosts first (+0.293), then "never so" amplifies by 1.5
        lex = self.lex(good=1.9)
        doc = tokenize("never so good", CFG, lex)
        assert token_valence(doc, 2, lex, CFG) == pytest.approx((1.9 + 0.293) * 1.5)

    def test_least_dampens(self):
        lex = self.lex(good=1.9)
        doc = tokenize("the least good", CFG, lex)
        assert token_valence(doc, 2, lex, CFG) == pytest.approx(1.9 * -0.74)

    def test_at_least_spared(self):
        lex = self.lex(good=1.9)
        doc = tokenize("at least good", CFG, lex)
        assert token_valence(doc, 2, lex, CFG) == 1.9

    def test_index_out_of_range(self):
        lex = self.lex(good=1.9)
        doc = tokenize("good", CFG, lex)
        with pytest.raises(IndexError):
            token_valence(doc, 1, lex, CFG)


class TestMatchNgrams:
    def test_phrase_longest_match(self, tiny_lexicon):
        doc = tokenize("na beg we dey", CFG, tiny_lexicon)
        assert match_ngrams(doc.tokens, 0, tiny_lexicon, CFG) == ("na beg", 2)

    def test_single_word_fallback(self, tiny_lexicon):
        doc = tokenize("just beg", CFG, tiny_lexicon)
        assert match_ngrams(doc.tokens, 1, tiny_lexicon, CFG) == ("beg", 1)

    def test_no_match(self, tiny_lexicon):
        doc = tokenize("oya now", CFG, tiny_lexicon)
        assert match_ngrams(doc.tokens, 0, tiny_lexicon, CFG) == (None, 1)

    def test_max_ngram_one_disables_phrases(self, tiny_lexicon):
        cfg = EngineConfig(max_ngram=1)
        doc = tokenize("na beg", cfg, tiny_lexicon)
        assert match_ngrams(doc.tokens, 0, tiny_lexicon, cfg) == (None, 1)

    def test_span_consumed_once(self, tiny_lexicon):
        # "beg" inside the phrase must not add its own -0.5
        phrase_only = polarity_scores("na beg", tiny_lexicon)
        assert phrase_only.compound == pytest.approx(
            normalize_compound(-1.5, CFG), abs=1e-12
        )


class TestButReweight:
    def test_no_but_unchanged(self):
        assert but_clause_reweight([1.0, -0.5], ["good", "meh"], CFG) == [1.0, -0.5]

    def test_split_weights(self):
        out = but_clause_reweight([1.0, 0.0, -1.0], ["good", "but", "bad"], CFG)
        assert out == [0.5, 0.0, -1.5]

    def test_only_first_but_splits(self):
        out = but_clause_reweight(
            [1.0, 0.0, -1.0, 0.0, 2.0], ["good", "but", "bad", "but", "fine"], CFG
        )
        assert out == [0.5, 0.0, -1.5, 0.0, 3.0]

    def test_case_insensitive(self):
        assert but_clause_reweight([1.0, 0.0], ["good", "BUT"], CFG) == [0.5, 0.0]


class TestPunctuationAmplifier:
    def test_none(self):
        assert punctuation_amplifier("ok", CFG) == 0.0

    def test_three_bangs(self):
        assert punctuation_amplifier("goal!!!", CFG) == pytest.approx(3 * 0.292)

    def test_bang_cap_at_four(self):
        assert punctuation_amplifier("goal!!!!!!", CFG) == pytest.approx(4 * 0.292)

    def test_single_question_ignored(self):
        assert punctuation_amplifier("why?", CFG) == 0.0

    def test_two_three_questions(self):
        assert punctuation_amplifier("why??", CFG) == pytest.approx(0.36)
        assert punctuation_amplifier("why???", CFG) == pytest.approx(0.54)

    def test_question_cap(self):
        assert punctuation_amplifier("why????", CFG) == pytest.approx(0.96)


class TestNormalizeCompound:
    def test_zero(self):
        assert normalize_compound(0.0, CFG) == 0.0

    def test_table_values(self):
        assert round(normalize_compound(-3.7, CFG), 4) == -0.6908
        assert round(normalize_compound(1.4, CFG), 4) == 0.3400

    def test_odd_function(self):
        for s in (0.3, 1.0, 2.7, 15.0):
            assert normalize_compound(-s, CFG) == -normalize_compound(s, CFG)

    def test_clamped(self):
        assert -1.0 <= normalize_compound(-1e9, CFG)
        assert normalize_compound(1e9, CFG) <= 1.0


class TestPolarityScores:
    def test_empty_text(self, tiny_lexicon):
        s = polarity_scores("", tiny_lexicon)
        assert (s.negative, s.neutral, s.positive, s.compound) == (0, 0, 0, 0)

    def test_no_hits_is_neutral(self, tiny_lexicon):
        s = polarity_scores("walahi oya sha", tiny_lexicon)
        assert s.compound == 0.0
        assert s.neutral == 1.0

    def test_proportions_sum_to_one(self, tiny_lexicon):
        s = polarity_scores("good and bad things", tiny_lexicon)
        assert s.negative + s.neutral + s.positive == pytest.approx(1.0, abs=1e-9)

    def test_punctuation_boosts_dominant_side(self, tiny_lexicon):
        base = polarity_scores("good stuff", tiny_lexicon)
        banged = polarity_scores("good stuff!", tiny_lexicon)
        assert banged.compound > base.compound

    def test_negation_flips_sign(self, tiny_lexicon):
        plain = polarity_scores("good", tiny_lexicon)
        negated = polarity_scores("not good", tiny_lexicon)
        assert plain.compound > 0 > negated.compound

    def test_deterministic(self, english_lexicon):
        text = "the food was not great, service was worse"
        a = polarity_scores(text, english_lexicon)
        assert a == polarity_scores(text, english_lexicon)

    def test_phrase_in_real_sentence(self, tiny_lexicon):
        s = polarity_scores("willian try make pass, na beg we dey", tiny_lexicon)
        assert s.compound == pytest.approx(normalize_compound(-1.5, CFG), abs=1e-12)

    def test_compound_matches_sum_pipeline(self, tiny_lexicon):
        # good (1.9) but bad (-2.5 * 1.5) -> 0.95 - 3.75
        s = polarity_scores("good but bad", tiny_lexicon)
        expected = normalize_compound(1.9 * 0.5 + (-2.5) * 1.5, CFG)
        assert s.compound == pytest.approx(expected, abs=1e-12)


class TestAgainstArithmetic:
    """Spot checks recomputed by hand from the rule definitions."""

    def test_exclamation_only_amplifies_nonzero(self, tiny_lexicon):
        assert polarity_scores("oya!!!", tiny_lexicon).compound == 0.0

    def test_mixed_sentence(self, tiny_lexicon):
        s = polarity_scores("very good but slightly bad!", tiny_lexicon)
        total = (1.9 + 0.293) * 0.5 + (-2.5 + 0.293) * 1.5
        total -= 0.292  # one '!', negative total
        assert s.compound == pytest.approx(normalize_compound(total, CFG), abs=1e-12)

"""Bigram language models with interpolated Witten-Bell smoothing.

For a history v with count c(v), distinct-follower count T(v) and follower
counts c(v,w):

    P(w|v) = (c(v,w) + T(v) * P_uni(w)) / (c(v) + T(v))

The unigram distribution runs over tokens including the sentence-end marker
and excluding sentence-start.  Sentence-start is a conditioning context
only; sentence-end is a predicted event.  The vocabulary is closed: scoring
a word outside it is a hard error.  Probabilities live in the natural-log
domain; ARPA export converts to log10.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import DataError, OovError

BOS = "<s>"
EOS = "</s>"


@dataclass
class HistoryStats:
    count: int = 0
    followers: dict[str, int] = field(default_factory=dict)

    @property
    def distinct(self) -> int:
        return len(self.followers)


@dataclass
class BigramLM:
    """Trained Witten-Bell bigram model; immutable after construction and
    safe for concurrent evaluation."""

    vocab: frozenset[str]               # predicted events, includes EOS
    unigram: dict[str, float]           # P_uni over vocab
    history: dict[str, HistoryStats]    # conditioning contexts, includes BOS

    def prob(self, v: str, w: str) -> float:
        if w not in self.vocab:
            raise OovError(w, context="predicted event")
        if v != BOS and v not in self.vocab:
            raise OovError(v, context="conditioning history")
        stats = self.history.get(v)
        if stats is None or stats.count + stats.distinct == 0:
            # No bigram evidence for this history: fall back to the unigram
            # distribution (reachable only through the uniform constructor).
            return self.unigram[w]
        t = stats.distinct
        return (stats.followers.get(w, 0) + t * self.unigram[w]) / (stats.count + t)

    def logprob(self, v: str, w: str) -> float:
        return math.log(self.prob(v, w))

    def sentence_logprob(self, words) -> float:
        """log P(w1..wn </s>), conditioning the first word on sentence-start."""
        return _sentence_logprob(self, words)

    def distinct_bigrams(self) -> int:
        return sum(h.distinct for h in self.history.values())

    @property
    def vocab_size(self) -> int:
        return len(self.vocab)

    @classmethod
    def uniform(cls, words) -> "BigramLM":
        """Degenerate model assigning 1/V to every event, V = |words| + 1
        (sentence-end included)."""
        vocab = frozenset(words) | {EOS}
        p = 1.0 / len(vocab)
        return cls(vocab=vocab, unigram={w: p for w in vocab}, history={})


def _sentence_logprob(model, words) -> float:
    total = 0.0
    prev = BOS
    for w in words:
        total += model.logprob(prev, w)
        prev = w
    return total + model.logprob(prev, EOS)


def _check_token(word: str) -> str:
    if not word or any(c.isspace() for c in word):
        raise DataError(f"invalid token {word!r}")
    if word in (BOS, EOS):
        raise DataError(f"reserved marker {word!r} used as a corpus token")
    return word


def train_bigram(sentences) -> BigramLM:
    """Train an interpolated Witten-Bell bigram model from word sequences."""
    sentences = list(sentences)
    if not sentences:
        raise DataError("empty corpus")

    uni_counts: dict[str, int] = {}
    history: dict[str, HistoryStats] = {}
    n_tokens = 0
    for sent in sentences:
        sent = [_check_token(w) for w in sent]
        if not sent:
            raise DataError("empty sentence in corpus")
        prev = BOS
        for w in sent + [EOS]:
            uni_counts[w] = uni_counts.get(w, 0) + 1
            n_tokens += 1
            stats = history.setdefault(prev, HistoryStats())
            stats.count += 1
            stats.followers[w] = stats.followers.get(w, 0) + 1
            prev = w

    unigram = {w: c / n_tokens for w, c in uni_counts.items()}
    return BigramLM(vocab=frozenset(uni_counts), unigram=unigram, history=history)


def perplexity(lm, sentences) -> tuple[float, int]:
    """exp of the average negative log-probability per predicted event.

    Events are every word plus one sentence-end per sentence; returns
    (ppl, n_events).  Raises OovError for any word outside the vocabulary.
    """
    total = 0.0
    n_events = 0
    for sent in sentences:
        sent = list(sent)
        if not sent:
            raise DataError("empty sentence in evaluation data")
        for w in sent:
            if w not in lm.vocab:
                raise OovError(w)
        total += lm.sentence_logprob(sent)
        n_events += len(sent) + 1
    if n_events == 0:
        raise DataError("no evaluation events")
    return math.exp(-total / n_events), n_events


# -- ARPA serialization ------------------------------------------------------

_LOG10 = math.log(10.0)


def _log10(p: float) -> float:
    return math.log10(p) if p > 0 else -99.0


def export_arpa(lm: BigramLM, path) -> None:
    """Write the model in ARPA back-off layout.

    Seen bigrams carry the full interpolated probability; the back-off
    weight of history v is T(v)/(c(v)+T(v)), so an unseen bigram evaluates
    to bow(v) * P_uni(w) -- exactly the interpolated Witten-Bell value.
    Emission order is sorted, so output is diff-stable across runs.
    """
    words = sorted(lm.vocab)
    bigrams = []
    for v in sorted(lm.history):
        for w in sorted(lm.history[v].followers):
            bigrams.append((v, w, lm.prob(v, w)))

    def bow(v: str) -> float:
        stats = lm.history.get(v)
        if stats is None or stats.count + stats.distinct == 0:
            return 1.0
        return stats.distinct / (stats.count + stats.distinct)

    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\\data\\\n")
        fh.write(f"ngram 1={len(words) + 1}\n")
        fh.write(f"ngram 2={len(bigrams)}\n")
        fh.write("\n\\1-grams:\n")
        fh.write(f"-99.000000000000\t{BOS}\t{_log10(bow(BOS)):.12f}\n")
        for w in words:
            line = f"{_log10(lm.unigram[w]):.12f}\t{w}"
            if w != EOS:
                line += f"\t{_log10(bow(w)):.12f}"
            fh.write(line + "\n")
        fh.write("\n\\2-grams:\n")
        for v, w, p in bigrams:
            fh.write(f"{_log10(p):.12f}\t{v} {w}\n")
        fh.write("\n\\end\\\n")


@dataclass
class ArpaBigramModel:
    """Bigram probabilities loaded from an ARPA file; presents the same
    prob/logprob/vocab interface as BigramLM."""

    vocab: frozenset[str]
    unigram: dict[str, float]
    bows: dict[str, float]
    bigrams: dict[tuple[str, str], float]

    def prob(self, v: str, w: str) -> float:
        if w not in self.vocab:
            raise OovError(w, context="predicted event")
        if v != BOS and v not in self.vocab:
            raise OovError(v, context="conditioning history")
        p = self.bigrams.get((v, w))
        if p is not None:
            return p
        return self.bows.get(v, 1.0) * self.unigram[w]

    def logprob(self, v: str, w: str) -> float:
        return math.log(self.prob(v, w))

    def sentence_logprob(self, words) -> float:
        return BigramLM.sentence_logprob(self, words)

    @property
    def vocab_size(self) -> int:
        return len(self.vocab)


def load_arpa(path) -> ArpaBigramModel:
    unigram: dict[str, float] = {}
    bows: dict[str, float] = {}
    bigrams: dict[tuple[str, str], float] = {}
    section = None
    with open(path, encoding="utf-8") as fh:
        for raw in fh:
            line = raw.strip()
            if not line:
                continue
            if line.startswith("\\"):
                section = line
                continue
            if section == "\\1-grams:":
                parts = line.split()
                if len(parts) not in (2, 3):
                    raise DataError(f"bad 1-gram line: {raw!r}")
                logp, w = float(parts[0]), parts[1]
                if w != BOS:
                    unigram[w] = 10.0 ** logp
                if len(parts) == 3:
                    bows[w] = 10.0 ** float(parts[2])
            elif section == "\\2-grams:":
                parts = line.split()
                if len(parts) != 3:
                    raise DataError(f"bad 2-gram line: {raw!r}")
                bigrams[(parts[1], parts[2])] = 10.0 ** float(parts[0])
            elif section == "\\data\\":
                continue
    if not unigram:
        raise DataError(f"no 1-grams found in {path}")
    return ArpaBigramModel(
        vocab=frozenset(unigram), unigram=unigram, bows=bows, bigrams=bigrams
    )

"""Shared fixtures: payload generators and one benchmark run per session."""

import random

import pytest

from voicepack import bench
from voicepack.codecs import CodecConfig


def make_payload(rng, n, kind):
    """One payload of length n from a named entropy class."""
    if kind == "random":
        return bytes(rng.getrandbits(8) for _ in range(n))
    if kind == "repeat":
        unit = bytes(rng.getrandbits(8) for _ in range(rng.randrange(1, 24)))
        return (unit * (n // len(unit) + 1))[:n]
    if kind == "text":
        words = [bytes(rng.getrandbits(7) | 32 for _ in range(rng.randrange(2, 9)))
                 for _ in range(16)]
        out = bytearray()
        while len(out) < n:
            out += words[rng.getrandbits(4)] + b" "
        return bytes(out[:n])
    if kind == "zeros":
        return bytes(n)
    if kind == "skewed":
        return bytes(rng.getrandbits(8) & rng.getrandbits(8) for _ in range(n))
    raise ValueError(kind)


PAYLOAD_KINDS = ("random", "repeat", "text", "zeros", "skewed")


def mixed_payloads(seed, count, max_len=10_000):
    """Deterministic payload suite spanning lengths 0..max_len, mixed entropy."""
    rng = random.Random(seed)
    pinned = [0, 1, 2, 3, 4, 5, 8, 9, 16, 17, 139, 140, 141, 255, 256, 257, max_len]
    payloads = []
    for i in range(count):
        if i < len(pinned):
            n = pinned[i]
        else:
            n = int(10 ** (rng.random() * 4))
            n = min(n, max_len)
        payloads.append(make_payload(rng, n, PAYLOAD_KINDS[i % len(PAYLOAD_KINDS)]))
    return payloads


@pytest.fixture(scope="session")
def cfg():
    return CodecConfig()


@pytest.fixture(scope="session")
def seed42_corpus():
    return bench.generate_corpus(bench.CorpusSpec(seed=42))


@pytest.fixture(scope="session")
def seed42_records(seed42_corpus):
    return bench.run_benchmark(seed42_corpus)

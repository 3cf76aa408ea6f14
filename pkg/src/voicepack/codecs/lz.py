"""Sliding-window LZ parse entropy-coded with the binary range coder.

The parser is greedy: at each position it takes the longest match found
through a hash chain over 3-octet prefixes (capped at 256 candidates per
position, which bounds pathological inputs without affecting realistic
ones).  Matches shorter than the configured minimum become literals, and
overlapping matches (offset smaller than length) are legal.

Token coding keeps separate adaptive probability contexts per decision
and conditions the literal/match flag and the literal tree on the kind
of the previous token.  Match lengths go through a 9-bit tree; offsets
are split into a 4-bit slot (the bit length of offset-1) plus direct
bits at probability one half.
"""

from dataclasses import dataclass

from voicepack.codecs.rangecoder import RangeDecoder, RangeEncoder, new_bit_probs
from voicepack.errors import CorruptStream

_CHAIN_TRIES = 256
_LEN_TREE_BITS = 9
_SLOT_TREE_BITS = 4


@dataclass(frozen=True)
class Literal:
    value: int


@dataclass(frozen=True)
class Match:
    offset: int
    length: int


def lz77_parse(data, cfg):
    """Greedy longest-match token sequence reconstructing `data` exactly."""
    n = len(data)
    if n == 0:
        return []
    window = cfg.lz_window
    min_match = cfg.lz_min_match
    max_match = cfg.lz_max_match
    head = {}
    chain = [-1] * n
    tokens = []
    get = head.get
    i = 0
    while i < n:
        best_len = 0
        best_pos = -1
        if i + min_match <= n and i + 3 <= n:
            key = data[i:i + 3]
            cand = get(key, -1)
            limit = i - window
            max_len = min(max_match, n - i)
            tries = _CHAIN_TRIES
            while cand >= limit and cand >= 0 and tries:
                tries -= 1
                probe = i + best_len
                if best_len == 0 or (probe < n and data[cand + best_len] == data[probe]):
                    l = 0
                    while l < max_len and data[cand + l] == data[i + l]:
                        l += 1
                    if l > best_len:
                        best_len = l
                        best_pos = cand
                        if l == max_len:
                            break
                cand = chain[cand]
        if best_len >= min_match:
            tokens.append(Match(i - best_pos, best_len))
            stop = min(i + best_len, n - 2)
            j = i
            while j < stop:
                key = data[j:j + 3]
                chain[j] = get(key, -1)
                head[key] = j
                j += 1
            i += best_len
        else:
            tokens.append(Literal(data[i]))
            if i + 3 <= n:
                key = data[i:i + 3]
                chain[i] = get(key, -1)
                head[key] = i
            i += 1
    return tokens


def tokens_to_bytes(tokens):
    """Expand a token sequence back to the original octets."""
    out = bytearray()
    for tok in tokens:
        if isinstance(tok, Literal):
            out.append(tok.value)
        else:
            src = len(out) - tok.offset
            if src < 0:
                raise CorruptStream("match offset before start of output")
            remaining = tok.length
            while remaining > 0:
                take = min(remaining, len(out) - src)
                out += out[src:src + take]
                src += take
                remaining -= take
    return bytes(out)


def serialized_token_bits(tokens):
    """Fixed-width size oracle: 1+8 bits per literal, 1+15+9 per match."""
    bits = 0
    for tok in tokens:
        bits += 9 if isinstance(tok, Literal) else 25
    return bits


def _models():
    return {
        "flag": new_bit_probs(2),
        "lit": new_bit_probs(2 * 256),
        "len": new_bit_probs(1 << _LEN_TREE_BITS),
        "slot": new_bit_probs(1 << _SLOT_TREE_BITS),
    }


def encode_payload(data, cfg):
    if not data:
        return b""
    tokens = lz77_parse(data, cfg)
    enc = RangeEncoder()
    m = _models()
    flag, lit, lent, slot = m["flag"], m["lit"], m["len"], m["slot"]
    min_match = cfg.lz_min_match
    prev_kind = 0
    for tok in tokens:
        if isinstance(tok, Literal):
            enc.encode_bit(flag, prev_kind, 0)
            enc.encode_tree(lit, prev_kind * 256, 8, tok.value)
            prev_kind = 0
        else:
            enc.encode_bit(flag, prev_kind, 1)
            enc.encode_tree(lent, 0, _LEN_TREE_BITS, tok.length - min_match)
            d = tok.offset - 1
            s = d.bit_length()
            enc.encode_tree(slot, 0, _SLOT_TREE_BITS, s)
            if s >= 2:
                enc.encode_direct(d - (1 << (s - 1)), s - 1)
            prev_kind = 1
    return enc.finish()


def decode_payload(payload, original_len, cfg):
    if original_len == 0:
        return b""
    dec = RangeDecoder(payload)
    m = _models()
    flag, lit, lent, slot = m["flag"], m["lit"], m["len"], m["slot"]
    min_match = cfg.lz_min_match
    out = bytearray()
    prev_kind = 0
    while len(out) < original_len:
        if dec.decode_bit(flag, prev_kind):
            length = dec.decode_tree(lent, 0, _LEN_TREE_BITS) + min_match
            s = dec.decode_tree(slot, 0, _SLOT_TREE_BITS)
            if s == 0:
                d = 0
            elif s == 1:
                d = 1
            else:
                d = (1 << (s - 1)) + dec.decode_direct(s - 1)
            offset = d + 1
            src = len(out) - offset
            if src < 0:
                raise CorruptStream("LZ match reaches before stream start")
            if len(out) + length > original_len:
                raise CorruptStream("LZ match overruns declared length")
            remaining = length
            while remaining > 0:
                take = min(remaining, len(out) - src)
                out += out[src:src + take]
                src += take
                remaining -= take
            prev_kind = 1
        else:
            out.append(dec.decode_tree(lit, prev_kind * 256, 8))
            prev_kind = 0
    return bytes(out)

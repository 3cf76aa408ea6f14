"""Huffman coding with a frequency header and canonical codes.

The tree is built by repeatedly merging the two lowest-weight roots;
weight ties are broken toward the node holding the smallest octet, so
tables are reproducible.  Code words are then re-assigned canonically
(sorted by length, then octet), which lets the decoder rebuild the exact
table from the transmitted frequencies alone.

Payload layout: symbol count (2 octets BE), then per symbol in ascending
octet order its value (1 octet) and count (4 octets BE), then the packed
code bits with the last partial octet zero-padded.
"""

import heapq
import struct
from collections import Counter

from voicepack.codecs.bitio import BitWriter
from voicepack.errors import CorruptStream, EmptyAlphabet

_HDR_COUNT = struct.Struct(">H")
_HDR_ENTRY = struct.Struct(">BI")


def _code_lengths(freqs):
    """Map each symbol to its depth in the deterministic Huffman tree."""
    if len(freqs) == 1:
        return {sym: 1 for sym in freqs}
    # Heap entries are (weight, smallest octet in subtree, tree); the
    # octet component is unique per live node, so trees never compare.
    heap = [(w, sym, sym) for sym, w in freqs.items()]
    heapq.heapify(heap)
    while len(heap) > 1:
        w1, m1, t1 = heapq.heappop(heap)
        w2, m2, t2 = heapq.heappop(heap)
        heapq.heappush(heap, (w1 + w2, min(m1, m2), (t1, t2)))
    lengths = {}
    stack = [(heap[0][2], 0)]
    while stack:
        node, depth = stack.pop()
        if isinstance(node, tuple):
            stack.append((node[0], depth + 1))
            stack.append((node[1], depth + 1))
        else:
            lengths[node] = depth
    return lengths


def build_huffman_table(freqs):
    """Return {octet: code string of '0'/'1'} for a frequency map.

    Codes are canonical: shorter codes sort first, ties ordered by octet.
    Raises EmptyAlphabet for an empty map; counts must be positive.
    """
    if not freqs:
        raise EmptyAlphabet("no symbols to code")
    for sym, count in freqs.items():
        if count <= 0:
            raise ValueError(f"count for symbol {sym} must be positive")
    lengths = _code_lengths(freqs)
    table = {}
    code = 0
    prev_len = 0
    for length, sym in sorted((l, s) for s, l in lengths.items()):
        code <<= length - prev_len
        table[sym] = format(code, f"0{length}b")
        code += 1
        prev_len = length
    return table


def huffman_encode(data):
    """Serialize frequencies plus the packed code bits."""
    freqs = Counter(data)
    header = bytearray(_HDR_COUNT.pack(len(freqs)))
    for sym in sorted(freqs):
        header += _HDR_ENTRY.pack(sym, freqs[sym])
    if not data:
        return bytes(header)
    table = build_huffman_table(freqs)
    codes = {sym: (int(bits, 2), len(bits)) for sym, bits in table.items()}
    bw = BitWriter()
    write = bw.write
    for b in data:
        value, width = codes[b]
        write(value, width)
    return bytes(header) + bw.getvalue()


def _parse_header(payload):
    if len(payload) < _HDR_COUNT.size:
        raise CorruptStream("huffman header truncated")
    (n,) = _HDR_COUNT.unpack_from(payload)
    body_at = _HDR_COUNT.size + n * _HDR_ENTRY.size
    if len(payload) < body_at:
        raise CorruptStream("huffman frequency table truncated")
    freqs = {}
    prev = -1
    for i in range(n):
        sym, count = _HDR_ENTRY.unpack_from(payload, _HDR_COUNT.size + i * _HDR_ENTRY.size)
        if sym <= prev:
            raise CorruptStream("huffman symbols not strictly ascending")
        if count == 0:
            raise CorruptStream("huffman count of zero")
        freqs[sym] = count
        prev = sym
    return freqs, body_at


def huffman_decode(payload, original_len):
    """Inverse of huffman_encode for a known output length."""
    freqs, body_at = _parse_header(payload)
    if original_len == 0:
        return b""
    if not freqs:
        raise CorruptStream("huffman body without symbols")

    # Canonical per-length decode tables.
    pairs = sorted((len(bits), sym) for sym, bits in build_huffman_table(freqs).items())
    max_len = pairs[-1][0]
    count = [0] * (max_len + 1)
    first = [0] * (max_len + 1)
    base = [0] * (max_len + 1)
    syms = [sym for _, sym in pairs]
    code = 0
    prev_len = 0
    idx = 0
    for length, _ in pairs:
        code <<= length - prev_len
        if length != prev_len or count[length] == 0:
            first[length] = code
            base[length] = idx
        count[length] += 1
        code += 1
        idx += 1
        prev_len = length

    body = payload[body_at:]
    total_bits = len(body) * 8
    out = bytearray()
    bitpos = 0
    acc = 0
    length = 0
    while len(out) < original_len:
        if bitpos >= total_bits:
            raise CorruptStream("huffman bit stream exhausted")
        acc = (acc << 1) | ((body[bitpos >> 3] >> (7 - (bitpos & 7))) & 1)
        bitpos += 1
        length += 1
        if length > max_len:
            raise CorruptStream("huffman bit pattern matches no code")
        if count[length] and acc - first[length] < count[length]:
            out.append(syms[base[length] + acc - first[length]])
            acc = 0
            length = 0
    return bytes(out)

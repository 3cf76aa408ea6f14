"""Six lossless codecs behind one compress/decompress pair.

Every algorithm round-trips any octet sequence exactly.  The serialized
container is self-describing up to the codec parameters: magic "CVT1",
one algorithm octet, the original length as 4 octets big-endian, then
the algorithm's payload.  Parameters that change the decode side (LZW
code width, PPM order) are not serialized and must match between the
two ends; the defaults are the interoperable baseline.
"""

import struct
from dataclasses import dataclass
from enum import IntEnum

from voicepack.codecs import arith, bwt, huffman, lz, lzw, ppm
from voicepack.errors import BadMagic, CorruptStream, UnknownAlgorithm

MAGIC = b"CVT1"
HEADER_LEN = 9

_LEN = struct.Struct(">I")


class AlgorithmId(IntEnum):
    NONE = 0
    LZW = 1
    LZMA = 2
    HUFFMAN = 3
    PPM = 4
    AC = 5
    BWT = 6

    @property
    def label(self):
        return self.name.lower()

    @classmethod
    def from_label(cls, label):
        try:
            return cls[label.upper()]
        except KeyError:
            raise UnknownAlgorithm(f"no algorithm named {label!r}") from None


@dataclass(frozen=True)
class CodecConfig:
    """Tunables left open by the algorithm definitions."""

    lzw_max_code_bits: int = 14
    ppm_order: int = 3
    bwt_block_size: int = 65536
    lz_window: int = 32768
    lz_min_match: int = 3
    lz_max_match: int = 273

    def __post_init__(self):
        if not 9 <= self.lzw_max_code_bits <= 16:
            raise ValueError("lzw_max_code_bits must be in 9..16")
        if not 0 <= self.ppm_order <= 8:
            raise ValueError("ppm_order must be in 0..8")
        if self.bwt_block_size < 1:
            raise ValueError("bwt_block_size must be positive")
        if not 1 <= self.lz_window <= 32768:
            raise ValueError("lz_window must be in 1..32768")
        if not 2 <= self.lz_min_match <= self.lz_max_match:
            raise ValueError("lz_min_match must be in 2..lz_max_match")
        if self.lz_max_match - self.lz_min_match > 510:
            raise ValueError("lz match length span exceeds 511 values")


DEFAULT_CONFIG = CodecConfig()


@dataclass(frozen=True)
class CompressedBlob:
    """Self-describing compressed container."""

    algorithm: AlgorithmId
    original_len: int
    payload: bytes

    def to_bytes(self):
        return MAGIC + bytes([self.algorithm]) + _LEN.pack(self.original_len) + self.payload

    @classmethod
    def parse(cls, raw):
        if len(raw) < HEADER_LEN:
            raise BadMagic("blob shorter than its header")
        if raw[:4] != MAGIC:
            raise BadMagic(f"bad magic {raw[:4]!r}")
        alg_octet = raw[4]
        try:
            alg = AlgorithmId(alg_octet)
        except ValueError:
            raise UnknownAlgorithm(f"algorithm octet {alg_octet}") from None
        (original_len,) = _LEN.unpack_from(raw, 5)
        return cls(alg, original_len, bytes(raw[HEADER_LEN:]))


def compress(data, alg, cfg=DEFAULT_CONFIG):
    """Compress octets under one algorithm; deterministic per (data, alg, cfg)."""
    data = bytes(data)
    if len(data) >= 1 << 32:
        raise ValueError("input too large for a 32-bit length header")
    alg = AlgorithmId(alg)
    if alg is AlgorithmId.NONE:
        payload = data
    elif alg is AlgorithmId.LZW:
        payload = lzw.encode_payload(data, cfg.lzw_max_code_bits)
    elif alg is AlgorithmId.LZMA:
        payload = lz.encode_payload(data, cfg)
    elif alg is AlgorithmId.HUFFMAN:
        payload = huffman.huffman_encode(data)
    elif alg is AlgorithmId.PPM:
        payload = ppm.ppm_encode(data, cfg.ppm_order)
    elif alg is AlgorithmId.AC:
        payload = arith.ac_encode(data)
    else:
        payload = bwt.encode_payload(data, cfg.bwt_block_size)
    return CompressedBlob(alg, len(data), payload)


def decompress(blob, cfg=DEFAULT_CONFIG):
    """Exact inverse of compress for the same configuration."""
    alg = blob.algorithm
    n = blob.original_len
    payload = blob.payload
    if alg is AlgorithmId.NONE:
        if len(payload) != n:
            raise CorruptStream("pass-through payload length mismatch")
        out = payload
    elif alg is AlgorithmId.LZW:
        out = lzw.decode_payload(payload, n, cfg.lzw_max_code_bits)
    elif alg is AlgorithmId.LZMA:
        out = lz.decode_payload(payload, n, cfg)
    elif alg is AlgorithmId.HUFFMAN:
        out = huffman.huffman_decode(payload, n)
    elif alg is AlgorithmId.PPM:
        out = ppm.ppm_decode(payload, n, cfg.ppm_order)
    elif alg is AlgorithmId.AC:
        out = arith.ac_decode(payload, n)
    elif alg is AlgorithmId.BWT:
        out = bwt.decode_payload(payload, n)
    else:  # pragma: no cover - AlgorithmId is closed
        raise UnknownAlgorithm(str(alg))
    if len(out) != n:
        raise CorruptStream("decoded length does not match header")
    return out

"""Pure-Python fallback for the crypto kernels: MD5 и AES-128-CBC.

Same interface as the compiled module (``_kernels``): md5_digest,
cbc_encrypt, cbc_decrypt. Slow but dependency-free; selected at import
when the extension is unavailable.
"""

from __future__ import annotations

import struct

BACKEND_NAME = "pure"

# ---------------------------------------------------------------------------
# MD5 (RFC 1321)
# ---------------------------------------------------------------------------

_MD5_K = [
    0xD76AA478, 0xE8C7B756, 0x242070DB, 0xC1BDCEEE, 0xF57C0FAF, 0x4787C62A,
    0xA8304613, 0xFD469501, 0x698098D8, 0x8B44F7AF, 0xFFFF5BB1, 0x895CD7BE,
    0x6B901122, 0xFD987193, 0xA679438E, 0x49B40821, 0xF61E2562, 0xC040B340,
    0x265E5A51, 0xE9B6C7AA, 0xD62F105D, 0x02441453, 0xD8A1E681, 0xE7D3FBC8,
    0x21E1CDE6, 0xC33707D6, 0xF4D50D87, 0x455A14ED, 0xA9E3E905, 0xFCEFA3F8,
    0x676F02D9, 0x8D2A4C8A, 0xFFFA3942, 0x8771F681, 0x6D9D6122, 0xFDE5380C,
    0xA4BEEA44, 0x4BDECFA9, 0xF6BB4B60, 0xBEBFBC70, 0x289B7EC6, 0xEAA127FA,
    0xD4EF3085, 0x04881D05, 0xD9D4D039, 0xE6DB99E5, 0x1FA27CF8, 0xC4AC5665,
    0xF4292244, 0x432AFF97, 0xAB9423A7, 0xFC93A039, 0x655B59C3, 0x8F0CCC92,
    0xFFEFF47D, 0x85845DD1, 0x6FA87E4F, 0xFE2CE6E0, 0xA3014314, 0x4E0811A1,
    0xF7537E82, 0xBD3AF235, 0x2AD7D2BB, 0xEB86D391,
]

_MD5_S = [
    7, 12, 17, 22, 7, 12, 17, 22, 7, 12, 17, 22, 7, 12, 17, 22,
    5, 9, 14, 20, 5, 9, 14, 20, 5, 9, 14, 20, 5, 9, 14, 20,
    4, 11, 16, 23, 4, 11, 16, 23, 4, 11, 16, 23, 4, 11, 16, 23,
    6, 10, 15, 21, 6, 10, 15, 21, 6, 10, 15, 21, 6, 10, 15, 21,
]

_MASK32 = 0xFFFFFFFF


def md5_digest(data: bytes) -> bytes:
    """One-shot MD5 over *data*, returning the 16-byte digest."""
    bit_len = (len(data) * 8) & 0xFFFFFFFFFFFFFFFF
    msg = data + b"\x80"
    msg += b"\x00" * ((56 - len(msg) % 64) % 64)
    msg += struct.pack("<Q", bit_len)

    a0, b0, c0, d0 = 0x67452301, 0xEFCDAB89, 0x98BADCFE, 0x10325476
    for off in range(0, len(msg), 64):
        m = struct.unpack_from("<16I", msg, off)
        a, b, c, d = a0, b0, c0, d0
        for i in range(64):
            if i < 16:
                f = (b & c) | (~b & d)
                g = i
            elif i < 32:
                f = (d & b) | (~d & c)
                g = (5 * i + 1) % 16
            elif i < 48:
                f = b ^ c ^ d
                g = (3 * i + 5) % 16
            else:
                f = c ^ (b | (~d & _MASK32))
                g = (7 * i) % 16
            x = (a + f + _MD5_K[i] + m[g]) & _MASK32
            s = _MD5_S[i]
            a, d, c = d, c, b
            b = (b + ((x << s | x >> (32 - s)) & _MASK32)) & _MASK32
        a0 = (a0 + a) & _MASK32
        b0 = (b0 + b) & _MASK32
        c0 = (c0 + c) & _MASK32
        d0 = (d0 + d) & _MASK32
    return struct.pack("<4I", a0, b0, c0, d0)


# ---------------------------------------------------------------------------
# AES-128 (FIPS-197) with CBC mode
# ---------------------------------------------------------------------------

_SBOX = bytes.fromhex(
    "637c777bf26b6fc53001672bfed7ab76ca82c97dfa5947f0add4a2af9ca472c0"
    "b7fd9326363ff7cc34a5e5f171d8311504c723c31896059a071280e2eb27b275"
    "09832c1a1b6e5aa0523bd6b329e32f8453d100ed20fcb15b6acbbe394a4c58cf"
    "d0efaafb434d338545f9027f503c9fa851a3408f929d38f5bcb6da2110fff3d2"
    "cd0c13ec5f974417c4a77e3d645d197360814fdc222a908846eeb814de5e0bdb"
    "e0323a0a4906245cc2d3ac629195e479e7c8376d8dd54ea96c56f4ea657aae08"
    "ba78252e1ca6b4c6e8dd741f4bbd8b8a703eb5664803f60e613557b986c11d9e"
    "e1f8981169d98e949b1e87e9ce5528df8ca1890dbfe6426841992d0fb054bb16"
)

_INV_SBOX = bytearray(256)
for _i, _v in enumerate(_SBOX):
    _INV_SBOX[_v] = _i
_INV_SBOX = bytes(_INV_SBOX)

_RCON = (0x01, 0x02, 0x04, 0x08, 0x10, 0x20, 0x40, 0x80, 0x1B, 0x36)


def _xtime(b: int) -> int:
    b <<= 1
    if b & 0x100:
        b ^= 0x11B
    return b & 0xFF


# GF(2^8) multiplication tables for the five MixColumns coefficients.
_MUL = {}
for _c in (2, 3, 9, 11, 13, 14):
    table = bytearray(256)
    for _x in range(256):
        acc, val, coef = 0, _x, _c
        while coef:
            if coef & 1:
                acc ^= val
            val = _xtime(val)
            coef >>= 1
        table[_x] = acc
    _MUL[_c] = bytes(table)


def _expand_key(key: bytes) -> list[bytes]:
    """Expand a 16-byte key into the 11 round keys."""
    words = [key[i:i + 4] for i in range(0, 16, 4)]
    for r in range(10):
        w = words[-1]
        w = bytes((_SBOX[w[1]] ^ _RCON[r], _SBOX[w[2]], _SBOX[w[3]], _SBOX[w[0]]))
        for j in range(4):
            w = bytes(a ^ b for a, b in zip(w, words[-4]))
            words.append(w)
    return [b"".join(words[4 * r:4 * r + 4]) for r in range(11)]


def _encrypt_block(rk: list[bytes], block: bytes) -> bytes:
    s = bytes(a ^ b for a, b in zip(block, rk[0]))
    m2, m3 = _MUL[2], _MUL[3]
    for rnd in range(1, 10):
        # SubBytes + ShiftRows
        t = bytes(
            _SBOX[s[(i + 4 * (i % 4)) % 16]] for i in range(16)
        )
        # MixColumns + AddRoundKey
        k = rk[rnd]
        out = bytearray(16)
        for c in range(0, 16, 4):
            a0, a1, a2, a3 = t[c], t[c + 1], t[c + 2], t[c + 3]
            out[c] = m2[a0] ^ m3[a1] ^ a2 ^ a3 ^ k[c]
            out[c + 1] = a0 ^ m2[a1] ^ m3[a2] ^ a3 ^ k[c + 1]
            out[c + 2] = a0 ^ a1 ^ m2[a2] ^ m3[a3] ^ k[c + 2]
            out[c + 3] = m3[a0] ^ a1 ^ a2 ^ m2[a3] ^ k[c + 3]
        s = bytes(out)
    k = rk[10]
    return bytes(
        _SBOX[s[(i + 4 * (i % 4)) % 16]] ^ k[i] for i in range(16)
    )


def _decrypt_block(rk: list[bytes], block: bytes) -> bytes:
    s = bytes(a ^ b for a, b in zip(block, rk[10]))
    m9, m11, m13, m14 = _MUL[9], _MUL[11], _MUL[13], _MUL[14]
    for rnd in range(9, 0, -1):
        # InvShiftRows + InvSubBytes
        t = bytes(
            _INV_SBOX[s[(i - 4 * (i % 4)) % 16]] for i in range(16)
        )
        # AddRoundKey + InvMixColumns
        k = rk[rnd]
        u = bytes(a ^ b for a, b in zip(t, k))
        out = bytearray(16)
        for c in range(0, 16, 4):
            a0, a1, a2, a3 = u[c], u[c + 1], u[c + 2], u[c + 3]
            out[c] = m14[a0] ^ m11[a1] ^ m13[a2] ^ m9[a3]
            out[c + 1] = m9[a0] ^ m14[a1] ^ m11[a2] ^ m13[a3]
            out[c + 2] = m13[a0] ^ m9[a1] ^ m14[a2] ^ m11[a3]
            out[c + 3] = m11[a0] ^ m13[a1] ^ m9[a2] ^ m14[a3]
        s = bytes(out)
    return bytes(
        _INV_SBOX[s[(i - 4 * (i % 4)) % 16]] ^ rk[0][i] for i in range(16)
    )


def cbc_encrypt(key: bytes, iv: bytes, plaintext: bytes) -> bytes:
    """AES-128-CBC over an already block-aligned plaintext."""
    if len(key) != 16 or len(iv) != 16:
        raise ValueError("key and iv must be 16 bytes")
    if len(plaintext) % 16:
        raise ValueError("plaintext must be a multiple of 16 bytes")
    rk = _expand_key(key)
    prev = iv
    out = bytearray()
    for off in range(0, len(plaintext), 16):
        block = bytes(a ^ b for a, b in zip(plaintext[off:off + 16], prev))
        prev = _encrypt_block(rk, block)
        out += prev
    return bytes(out)


def cbc_decrypt(key: bytes, iv: bytes, ciphertext: bytes) -> bytes:
    if len(key) != 16 or len(iv) != 16:
        raise ValueError("key and iv must be 16 bytes")
    if len(ciphertext) % 16:
        raise ValueError("ciphertext must be a multiple of 16 bytes")
    rk = _expand_key(key)
    prev = iv
    out = bytearray()
    for off in range(0, len(ciphertext), 16):
        block = ciphertext[off:off + 16]
        out += bytes(a ^ b for a, b in zip(_decrypt_block(rk, block), prev))
        prev = block
    return bytes(out)

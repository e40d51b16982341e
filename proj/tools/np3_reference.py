#!/usr/bin/env python3
"""Line-by-line transliteration of the original np^3 family generator.

Used only to produce the golden files under tests/fixtures; the C++
implementation is checked against its output byte for byte. The interactive
"Enter p..." prompt is not reproduced.

    python3 tools/np3_reference.py P N_MAX > tests/fixtures/np3_pP_nN.golden
"""

import sys


def disp_nums(out, ptr, v):
    out.append("C%d(%s)\n" % (v, ",".join(str(x) for x in ptr)))


def compute_trans(out, ptr, v, p, n):
    for t in range(1, p):
        new = [(x + n * t * p * (x % p)) % v for x in ptr]
        new.sort()
        disp_nums(out, new, v)
    out.append("\n" + "-" * 34 + "\n\n")


def main():
    p = int(sys.argv[1])
    n_max = int(sys.argv[2]) if len(sys.argv) > 2 else 5
    out = []
    for n in range(1, n_max + 1):
        out.append("\np = %d and n=%d\n" % (p, n))
        out.append("-" * 28 + "\n")
        v = n * p * p * p
        jumpsize = p + 1
        js = 2 * jumpsize
        for k in range(1, n * p):
            if k % p == 0:
                continue
            ptr = [0] * js
            j = 1
            ptr[0] = k
            ptr[1] = p
            for i in range(2, jumpsize, 2):
                ptr[i] = j * n * p * p - k
                ptr[i + 1] = j * n * p * p + k
                j += 1
            for i in range(jumpsize):
                ptr[2 * jumpsize - 1 - i] = v - ptr[i]
            ptr.sort()
            disp_nums(out, ptr, v)
            compute_trans(out, ptr, v, p, n)
    sys.stdout.write("".join(out))


if __name__ == "__main__":
    main()

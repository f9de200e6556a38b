"""Reference values of E_{a,b}(z) from the power series in high precision.

Prints a Rust array literal of (alpha, beta, z, value) tuples. Precision is
raised with |z|^(1/alpha) so that the cancellation in the series is resolved.
"""
import mpmath as mp


def ml_series(a, b, z):
    a, b, z = mp.mpf(a), mp.mpf(b), mp.mpf(z)
    s = mp.mpf(0)
    n = 0
    while True:
        t = z**n * mp.rgamma(a * n + b)
        s += t
        n += 1
        if n > 50 and abs(t) < mp.mpf(10) ** (-mp.mp.dps + 5) * max(1, abs(s)):
            return s


def reference(a, b, z):
    growth = abs(z) ** (1.0 / a)
    mp.mp.dps = 40 + int(growth / 2.0)
    return ml_series(a, b, z)


alphas = [0.1, 0.3, 0.5, 0.7, 0.9, 0.95, 1.0]
rows = []
for a in alphas:
    for b in sorted({a, 1.0, a + 1.0, 2.0, 0.5, a + 2.0}):
        for z in [-0.1, -1.0, -3.0, -8.0, -15.0, -40.0, -100.0, 0.5, 2.0]:
            if abs(z) ** (1.0 / a) > 1500:
                continue
            v = reference(a, b, z)
            if abs(v) < 1e300:
                rows.append((a, b, z, v))

print("pub const ML_REFERENCE: &[(f64, f64, f64, f64)] = &[")
for a, b, z, v in rows:
    print(f"    ({a!r}, {b!r}, {z!r}, {mp.nstr(v, 20, min_fixed=-1, max_fixed=-1)}),")
print("];")

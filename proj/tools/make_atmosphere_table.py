#!/usr/bin/env python3
"""Regenerate data/zenith_attenuation.csv.

Zenith gas attenuation (oxygen + water vapour) from the ITU-R P.676
approximate specific-attenuation formulas with equivalent-height columns.
Reference conditions: sea level, 1013 hPa, 15 C, water vapour 7.5 g/m^3.

The 57..63 GHz oxygen plateau is bridged by a quadratic through the
band edges and the 15 dB/km peak at 60 GHz, matching the published
magnitude of the O2 absorption complex.
"""

import argparse
import os


def gamma_oxygen(f_ghz: float) -> float:
    """Oxygen specific attenuation [dB/km] at sea level."""
    f = f_ghz
    if f < 57.0:
        return (7.19e-3 + 6.09 / (f * f + 0.227) + 4.81 / ((f - 57.0) ** 2 + 1.50)) * f * f * 1e-3
    if f > 63.0:
        return (3.79e-7 * f + 0.265 / ((f - 63.0) ** 2 + 1.59)
                + 0.028 / ((f - 118.0) ** 2 + 1.47)) * (f + 198.0) ** 2 * 1e-3
    # 57..63 GHz: quadratic through (57, g57), (60, 15.0), (63, g63)
    g57 = gamma_oxygen(56.999999999)
    g63 = gamma_oxygen(63.000000001)
    t = (f - 60.0) / 3.0  # -1 at 57, 0 at 60, +1 at 63
    return 15.0 + t * (g63 - g57) / 2.0 + t * t * ((g63 + g57) / 2.0 - 15.0)


def gamma_water(f_ghz: float, rho: float = 7.5) -> float:
    """Water vapour specific attenuation [dB/km] at sea level."""
    f = f_ghz
    return (0.050 + 0.0021 * rho
            + 3.6 / ((f - 22.2) ** 2 + 8.5)
            + 10.6 / ((f - 183.3) ** 2 + 9.0)
            + 8.9 / ((f - 325.4) ** 2 + 26.3)) * f * f * rho * 1e-4


def equivalent_height_oxygen(f_ghz: float) -> float:
    """Equivalent column height [km] for dry air."""
    f = f_ghz
    if f < 57.0:
        return 6.0
    if f > 63.0:
        return 6.0 + 40.0 / ((f - 118.7) ** 2 + 1.0)
    return 6.0


def equivalent_height_water(f_ghz: float) -> float:
    """Equivalent column height [km] for water vapour."""
    f = f_ghz
    return 1.6 * (1.0 + 3.0 / ((f - 22.2) ** 2 + 5.0)
                  + 5.0 / ((f - 183.3) ** 2 + 6.0)
                  + 2.5 / ((f - 325.4) ** 2 + 4.0))


def zenith_attenuation(f_ghz: float) -> float:
    """Total one-way zenith attenuation [dB]."""
    return (gamma_oxygen(f_ghz) * equivalent_height_oxygen(f_ghz)
            + gamma_water(f_ghz) * equivalent_height_water(f_ghz))


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--fstart", type=float, default=1.0, help="first grid frequency [GHz]")
    parser.add_argument("--fstop", type=float, default=100.0, help="last grid frequency [GHz]")
    parser.add_argument("--fstep", type=float, default=1.0, help="grid step [GHz]")
    default_out = os.path.join(os.path.dirname(__file__), "..", "data", "zenith_attenuation.csv")
    parser.add_argument("--output", default=os.path.normpath(default_out))
    args = parser.parse_args()

    n = int(round((args.fstop - args.fstart) / args.fstep)) + 1
    with open(args.output, "w") as out:
        out.write("frequency_ghz,zenith_db\n")
        for i in range(n):
            f = args.fstart + i * args.fstep
            out.write("%.17g,%.17g\n" % (f, zenith_attenuation(f)))
    print("wrote %s (%d rows)" % (args.output, n))


if __name__ == "__main__":
    main()

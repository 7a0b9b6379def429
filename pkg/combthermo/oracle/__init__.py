from combthermo.oracle.box import BoxSpectrum, box_spectrum, delta_f_bruteforce

__all__ = ["BoxSpectrum", "box_spectrum", "delta_f_bruteforce"]

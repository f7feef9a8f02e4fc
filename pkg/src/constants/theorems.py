"""
Theorem tags and their error-bound constants
"""

from fractions import Fraction

# Theorem tags carried by every Enclosure
HH = 'HH'                # Hermite-Hadamard midpoint/endpoint bracket
HH_M2_LOWER = 'HH-m2'    # refinement driven by the lower second-derivative bound
HH_M2_UPPER = 'HH-M2'    # refinement driven by the upper second-derivative bound
EQ7 = 'EQ7'              # coarse C2 bound
THM0 = 'THM0'            # C1 bound
THM1 = 'THM1'            # C2 bound
THM2 = 'THM2'            # C3 bound, sharp
EQ4 = 'EQ4'              # classical fourth-derivative remainder
THM3 = 'THM3'            # convex second derivative, two-sided
THM4 = 'THM4'            # corrected rule
EQ8_9 = 'EQ8-9'          # corrected-rule intermediate brackets
THM5 = 'THM5'            # coth mean bracket
THM6 = 'THM6'            # corrected coth mean

# Exact constants; floats below are derived from these
THEOREM_FRACTIONS = {
    HH: Fraction(0),
    HH_M2_LOWER: Fraction(1, 24),
    HH_M2_UPPER: Fraction(1, 24),
    EQ7: Fraction(1, 36),
    THM0: Fraction(5, 72),
    THM1: Fraction(1, 162),
    THM2: Fraction(1, 1152),
    EQ4: Fraction(1, 2880),
    THM3: Fraction(1, 162),
    THM4: Fraction(11, 57600),
    EQ8_9: Fraction(11, 25920),
    THM5: Fraction(16, 243),
    THM6: Fraction(22, 1125),
}

THEOREM_CONSTANTS = {tag: float(value) for tag, value in THEOREM_FRACTIONS.items()}

# Tie-break order for best_bound; a tie goes to the tag listed later
TIE_ORDER = [THM4, THM3, EQ4, THM2, THM1, EQ7, THM0]

# Corrected-rule weight on the midpoint second-derivative defect
CORRECTION_FACTOR = Fraction(1, 360)

# Known bracket for the best C2 constant: a witness reaches the lower end
A_INTERVAL = (Fraction(1, 288), Fraction(1, 162))

# Empirical search bracket per smoothness class: (known lower, proven upper)
SEARCH_BRACKETS = {
    'C1': (None, Fraction(5, 72)),
    'C2': A_INTERVAL,
}

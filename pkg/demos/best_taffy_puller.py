"""Which taffy puller stretches fastest per turn of the crank?

Builds the efficiency table for the bundled devices and adds one appendix
device from a braid word typed in by hand.
"""

from taffy.braids import BraidWord
from taffy.report import analyze, table, to_csv

rows = table()
print(to_csv(rows))

# The first McCarthy (1916) configuration is listed with dilatation phi^6.
# Any braid with that dilatation stands in for the motion when checking the row.
mccarthy = analyze("mccarthy-1916a", braid=BraidWord.parse("1 -2 1 -2 1 -2", 4))
print(mccarthy.name, mccarthy.char_poly, round(mccarthy.dilatation, 4), round(mccarthy.efficiency, 4))

best = max((r for r in rows if not isinstance(r, tuple)), key=lambda r: r.efficiency)
print("most efficient:", best.name, round(best.efficiency, 4), "(" + best.flag + ")")

"""Walk through detection and rewriting on a small smelly source file.

Run: python demos/01_scan_and_rewrites.py
"""

from perfidiom import parse_unit
from perfidiom.report import write_detection
from perfidiom.smells import apply_detections, scan_unit

SMELLY = """\
squares = []
for value in range(12):
    if value % 2 == 1:
        squares.append(value * value)

total = 0
count = 0

lo, hi = 3, 9
inside = total > lo and total <= hi
"""

unit = parse_unit("demo.py", SMELLY)
detections = scan_unit(unit)

print(f"{len(detections)} detections\n")
for det in detections:
    record = write_detection(det)
    print(f"- {record['idiom']} at line {record['lineno'][0][0][0]}")
    print(f"    before: {record['compli_code']}")
    print(f"    after:  {record['simple_code']}")

print("\nfull file with every suggestion applied:\n")
print(apply_detections(SMELLY, detections))

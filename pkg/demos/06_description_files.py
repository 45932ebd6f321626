"""
Describing spaces in a text file
================================

The command line tool reads a small description language. This script
parses a description, builds the objects and prints the normalized text,
then runs the same query through the command line entry point.
"""

import io
import os
import tempfile

from probcat.cli import main
from probcat.dsl import format_document, parse

TEXT = """
# two fair coins and the first toss
space Y { outcomes HH HT TH TT ; prob 0=1/4 1=1/4 2=1/4 3=1/4 }
space X { outcomes H T ; prob 0=0.5 1=0.5 }
map first : Y -> X { HH -> H  HT -> H  TH -> T  TT -> T }
rv heads on Y { HH = 2  HT = 1  TH = 1  TT = 0 }
"""

doc = parse(TEXT)
print(format_document(doc))
print("arrow:", doc.arrow("first"))

# The same query through the command line tool, which reads a file.
with tempfile.TemporaryDirectory() as tmp:
    path = os.path.join(tmp, "coins.pc")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(TEXT)
    out = io.StringIO()
    code = main(["condexp", path, "--arrow", "first", "--rv", "heads"], stdout=out)
    print("exit", code)
    print(out.getvalue(), end="")

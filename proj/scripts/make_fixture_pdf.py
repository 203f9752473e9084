#!/usr/bin/env python3
"""Renders the two-page PDF fixture used by the extraction tests.

Committed at tests/data/fixture_two_chapters.pdf. Page one carries
"CHAPTER 1" / "abc", page two "CHAPTER 2" / "def", drawn as ordinary text so
a text-based extractor can round-trip it.
"""

from reportlab.lib.pagesizes import letter
from reportlab.pdfgen import canvas

OUT = "tests/data/fixture_two_chapters.pdf"


def main():
    c = canvas.Canvas(OUT, pagesize=letter)
    c.setAuthor("booksum tests")
    c.setTitle("fixture")
    c.setFont("Helvetica", 14)
    c.drawString(72, 720, "CHAPTER 1")
    c.drawString(72, 700, "abc")
    c.showPage()
    c.setFont("Helvetica", 14)
    c.drawString(72, 720, "CHAPTER 2")
    c.drawString(72, 700, "def")
    c.showPage()
    c.save()
    print("wrote", OUT)


if __name__ == "__main__":
    main()

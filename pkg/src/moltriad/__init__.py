"""moltriad: molecule parsing, descriptors, tri-modal alignment, instruction
data synthesis, and generation-quality evaluation."""

__version__ = "0.1.0"

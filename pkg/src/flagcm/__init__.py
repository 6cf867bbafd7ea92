"""Face numbers of flag, balanced and Cohen-Macaulay simplicial complexes."""

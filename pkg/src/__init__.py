"""Standard Subspace Verifier - Numerical checks of the reflection and dilation geometry of standard subspaces."""

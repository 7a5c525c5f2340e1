"""Hecke algebras with parameters from Langlands-parameter data."""

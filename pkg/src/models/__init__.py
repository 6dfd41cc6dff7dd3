"""Petri nets, channel systems and the model file reader"""

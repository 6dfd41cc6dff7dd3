"""Ideal Cover: ideals of well-quasi-orders and cover computation"""

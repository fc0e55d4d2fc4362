// x to the power y for y >= 0, iterative.
double power(double x, int y)
{
    double result = 1;
    while (y > 0) {
        result = result * x;
        y = y - 1;
    }
    return result;
}
